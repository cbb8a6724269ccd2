"""CR vector fields tangent to a generic submanifold and finite type at 0.

Fields are polynomial derivations in the frame ``d/dZ_1..d/dZ_N,
d/d~Z_1..d/d~Z_N`` (the variable order of the complexified table).  The
(0,1) fields are built with an adjugate construction so that they annihilate
every defining polynomial identically; no division is needed.
"""
from __future__ import annotations

import dataclasses
import itertools

from .core.linalg import IncrementalBasis
from .core.numbers import ZERO
from .core.poly import Poly, adjugate, conj_involution, det
from .errors import CRLabError, InvariantError, UsageError

DEFAULT_BRACKET_CAP = 8


@dataclasses.dataclass(frozen=True)
class VectorField:
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if not coeffs:
            raise UsageError("a vector field needs at least one coefficient")
        table = coeffs[0].table
        if len(coeffs) != len(table) or any(c.table != table for c in coeffs):
            raise UsageError("vector field coefficients must cover one full variable table")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def table(self):
        return self.coeffs[0].table

    def __call__(self, f):
        """Apply the derivation to a polynomial."""
        out = Poly.zero(self.table)
        for k, c in enumerate(self.coeffs):
            if c:
                df = f.diff(k)
                if df:
                    out = out + c * df
        return out

    def bracket(self, other):
        return lie_bracket(self, other)

    def is_zero(self):
        return all(not c for c in self.coeffs)

    def at_origin(self):
        return tuple(c.constant_term() for c in self.coeffs)

    def conj(self):
        """Conjugate field: conjugate coefficients and swap d/dZ_k with d/d~Z_k."""
        table = self.table
        out = [None] * len(table)
        for k, c in enumerate(self.coeffs):
            out[table.pairing[k]] = conj_involution(c)
        return VectorField(tuple(out))

    def __add__(self, other):
        return VectorField(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return VectorField(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c):
        return VectorField(tuple(a.scale(c) for a in self.coeffs))

    def as_vector(self):
        """Sparse coordinates over C: ``{(frame index, monomial): coefficient}``."""
        return {(k, m): v for k, c in enumerate(self.coeffs) for m, v in c.terms.items()}

    def __str__(self):
        names = self.table.names
        parts = [f"d/d{names[k]}" if c == 1 else f"({c})*d/d{names[k]}" for k, c in enumerate(self.coeffs) if c]
        return " + ".join(parts) or "0"


def lie_bracket(V, W):
    """``[V, W]_k = V(W_k) - W(V_k)``."""
    if V.table != W.table:
        raise UsageError("bracket of fields on different tables")
    return VectorField(tuple(V(w) - W(v) for v, w in zip(V.coeffs, W.coeffs)))


def cr_fields(M):
    """Generators of the CR fields of ``M``: N-d fields of type (0,1), then their conjugates."""
    table = M.table
    n, d = M.N, M.d
    zeta = table.zeta_indices
    jac = [[s.diff(k) for k in zeta] for s in M.sigma]
    origin = [0] * len(table)
    chosen = None
    for cols in itertools.combinations(range(n), d):
        block = [[row[c] for c in cols] for row in jac]
        if det(block).evaluate(origin):
            chosen = cols
            break
    if chosen is None:
        raise InvariantError("genericity", "no d x d minor of dsigma/dzeta is invertible at 0")
    A = [[row[c] for c in chosen] for row in jac]
    detA = det(A)
    adj = adjugate(A)
    zero = Poly.zero(table)
    fields = []
    for k in range(n):
        if k in chosen:
            continue
        coeffs = [zero] * len(table)
        coeffs[zeta[k]] = detA
        b = [row[k] for row in jac]
        for pos, j in enumerate(chosen):
            entry = zero
            for r in range(d):
                entry = entry + adj[pos][r] * b[r]
            coeffs[zeta[j]] = coeffs[zeta[j]] - entry
        fields.append(VectorField(tuple(coeffs)))
    return fields + [f.conj() for f in fields]


@dataclasses.dataclass(frozen=True)
class FiniteType:
    order: int

    def __str__(self):
        return f"FiniteType({self.order})"


@dataclasses.dataclass(frozen=True)
class UndeterminedBeyond:
    cap: int

    def __str__(self):
        return f"UndeterminedBeyond({self.cap})"


@dataclasses.dataclass(frozen=True)
class TypeReport:
    status: object
    span_dims: tuple
    target_dim: int
    fields_checked: int = 0

    @property
    def is_finite(self):
        return isinstance(self.status, FiniteType)


def _linear_basis(fields):
    """C-linearly independent subset of ``fields`` (as polynomial objects), in order."""
    basis = IncrementalBasis()
    out = []
    for f in fields:
        if basis.add(f.as_vector()):
            out.append(f)
    return out


def _assert_tangent(M, field):
    for s in M.sigma:
        if field(s):
            raise CRLabError(f"field {field} does not annihilate {s}; tangency construction is broken")


def bracket_levels(M, cap):
    """Yield, for lengths 1..cap, a C-basis of the left-nested brackets of that length.

    Level ``m`` is spanned by ``[v, g]`` with ``v`` from level ``m-1`` and
    ``g`` a generator.  Dropping C-linear dependencies is harmless because the
    bracket is bilinear over constants.
    """
    gens = cr_fields(M)
    level = _linear_basis(gens)
    for m in range(1, cap + 1):
        if m > 1:
            level = _linear_basis(
                [br for v in level for g in gens if not (br := lie_bracket(v, g)).is_zero()]
            )
        yield m, level


def finite_type_order(M, cap=DEFAULT_BRACKET_CAP, check_tangency=True):
    """Bracket length at which the CR fields span ``C T_0 M``, up to ``cap``."""
    if cap < 1:
        raise UsageError("bracket cap must be >= 1")
    target = 2 * M.N - M.d
    span = IncrementalBasis()
    dims = []
    checked = 0
    status = UndeterminedBeyond(cap)
    for m, level in bracket_levels(M, cap):
        for f in level:
            if check_tangency:
                _assert_tangent(M, f)
                checked += 1
            value = f.at_origin()
            span.add({k: v for k, v in enumerate(value) if v != ZERO})
        dims.append(len(span))
        if len(span) >= target:
            status = FiniteType(m)
            break
    return TypeReport(status, tuple(dims), target, checked)


def all_bracket_words(gens, length):
    """Every bracket of exactly ``length`` generators, over all bracketings."""
    memo = {1: list(gens)}
    for n in range(2, length + 1):
        out = []
        for k in range(1, n):
            for a in memo[k]:
                for b in memo[n - k]:
                    br = lie_bracket(a, b)
                    if not br.is_zero():
                        out.append(br)
        memo[n] = _linear_basis(out)
    return memo[length]
