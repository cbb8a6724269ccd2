"""Ideals and Gröbner bases.

Buchberger's algorithm with the Gebauer-Möller pair criteria and the normal
selection strategy (smallest lcm first, ties broken by generator index), plus
the ideal-theoretic operations built on it: normal forms, (radical)
membership, elimination, Krull dimension, local colength at the origin and
preimages under polynomial maps.
"""
from __future__ import annotations

import dataclasses
import functools
import itertools

from .config import limits
from .core.linalg import IncrementalBasis
from .core.numbers import ONE
from .core.orders import BlockOrder, DegRevLex, MonomialOrder, degrevlex
from .core.poly import Poly, mon_div, mon_divides, mon_lcm
from .core.variables import VarTable
from .errors import ResourceLimitError, UsageError


# ---------------------------------------------------------------------------
# raw dict-level machinery


class _Keys(dict):
    """Memoized ``order.key``."""

    def __init__(self, order):
        super().__init__()
        self.order = order

    def __missing__(self, mon):
        k = self.order.key(mon)
        self[mon] = k
        return k


def _lead(terms, keys):
    return max(terms, key=keys.__getitem__)


def _sub_scaled(f, g, shift, c):
    """In place: ``f -= c * x^shift * g``."""
    for m, v in g.items():
        mm = tuple(a + b for a, b in zip(m, shift))
        nv = f.get(mm)
        if nv is None:
            f[mm] = -(c * v)
        else:
            nv = nv - c * v
            if nv:
                f[mm] = nv
            else:
                del f[mm]


def _reduce(f, basis, keys, full=True):
    """Normal form of ``f`` (dict) by ``basis``: list of ``(lm, monic dict)``."""
    f = dict(f)
    rem = {}
    while f:
        m = _lead(f, keys)
        c = f[m]
        for lm, g in basis:
            if mon_divides(lm, m):
                _sub_scaled(f, g, mon_div(m, lm), c)
                break
        else:
            if not full:
                rem.update(f)
                return rem
            rem[m] = c
            del f[m]
    return rem


def _monic(f, keys):
    lm = _lead(f, keys)
    inv = f[lm].inverse()
    if inv == ONE:
        return lm, f
    return lm, {m: c * inv for m, c in f.items()}


def _spoly(f, lf, g, lg):
    lcm = mon_lcm(lf, lg)
    out = {}
    sf = mon_div(lcm, lf)
    sg = mon_div(lcm, lg)
    for m, c in f.items():
        out[tuple(a + b for a, b in zip(m, sf))] = c
    _sub_scaled(out, g, sg, ONE)
    return out


def _coprime(a, b):
    return all(not (x and y) for x, y in zip(a, b))


def _gm_update(store, active, pairs, h):
    """Gebauer-Möller update after adding ``store[h]``; returns (active, pairs)."""
    lh = store[h][0]
    lcm_of = {g: mon_lcm(store[g][0], lh) for g in active}
    candidates = list(active)
    keep = []
    for idx, g in enumerate(candidates):
        lg = lcm_of[g]
        if _coprime(store[g][0], lh):
            keep.append(g)
            continue
        others = candidates[idx + 1:]
        if any(mon_divides(lcm_of[o], lg) for o in others) or any(mon_divides(lcm_of[o], lg) for o in keep):
            continue
        keep.append(g)
    new_pairs = [(g, h) for g in keep if not _coprime(store[g][0], lh)]
    survivors = []
    for (a, b) in pairs:
        lab = mon_lcm(store[a][0], store[b][0])
        if (
            not mon_divides(lh, lab)
            or mon_lcm(store[a][0], lh) == lab
            or mon_lcm(store[b][0], lh) == lab
        ):
            survivors.append((a, b))
    active = [g for g in active if not mon_divides(lh, store[g][0])] + [h]
    return active, survivors + new_pairs


def _buchberger_raw(polys, keys):
    """Reduced Gröbner basis of dict polynomials; returns list of (lm, monic dict)."""
    polys = [f for f in polys if f]
    if all(len(f) == 1 for f in polys):
        # monomial ideal: the minimal generators already form the reduced basis
        mons = sorted({m for f in polys for m in f}, key=sum)
        minimal = []
        for m in mons:
            for a in minimal:
                if mon_divides(a, m):
                    break
            else:
                minimal.append(m)
        minimal.sort(key=keys.order.key, reverse=True)
        return [(m, {m: ONE}) for m in minimal]
    store = []
    active = []
    pairs = []
    for f in polys:
        if not f:
            continue
        f = _reduce(f, [store[g] for g in active], keys)
        if not f:
            continue
        store.append(_monic(f, keys))
        active, pairs = _gm_update(store, active, pairs, len(store) - 1)
        if store[-1][0] == (0,) * len(store[-1][0]):
            return [store[-1]]
    processed = 0
    while pairs:
        best = min(
            range(len(pairs)),
            key=lambda k: _pair_rank(store, pairs[k], keys),
        )
        a, b = pairs.pop(best)
        processed += 1
        if processed > limits.max_pairs:
            raise ResourceLimitError(
                "Buchberger pair budget exhausted",
                pairs_processed=processed - 1,
                pairs_pending=len(pairs) + 1,
                basis_size=len(active),
            )
        lcm = mon_lcm(store[a][0], store[b][0])
        if sum(lcm) > limits.max_degree:
            raise ResourceLimitError(
                "S-polynomial exceeds the degree cap", degree=sum(lcm), basis_size=len(active),
                pairs_processed=processed,
            )
        s = _spoly(store[a][1], store[a][0], store[b][1], store[b][0])
        h = _reduce(s, [store[g] for g in active], keys)
        if not h:
            continue
        store.append(_monic(h, keys))
        if len(store) > limits.max_basis_size:
            raise ResourceLimitError(
                "Gröbner basis grew beyond the size cap", basis_size=len(active), pairs_processed=processed,
            )
        active, pairs = _gm_update(store, active, pairs, len(store) - 1)
        if not any(store[-1][0]):
            return [store[-1]]
    return _interreduce([store[g] for g in active], keys)


def _pair_rank(store, pair, keys):
    lcm = mon_lcm(store[pair[0]][0], store[pair[1]][0])
    return (keys[lcm], pair[0], pair[1])


def _interreduce(basis, keys):
    basis = sorted(basis, key=lambda t: keys[t[0]])
    minimal = []
    for lm, g in basis:
        if not any(mon_divides(l2, lm) for l2, _ in minimal):
            minimal.append((lm, g))
    out = []
    for i, (lm, g) in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        tail = {m: c for m, c in g.items() if m != lm}
        tail = _reduce(tail, others, keys)
        tail[lm] = g[lm]
        out.append((lm, tail))
    out.sort(key=lambda t: keys[t[0]], reverse=True)
    return out


# ---------------------------------------------------------------------------
# public API


def _common_table(polys, table=None):
    for p in polys:
        if table is None:
            table = p.table
        elif p.table != table:
            raise UsageError("generators live on different variable tables")
    if table is None:
        raise UsageError("cannot infer the variable table of an empty generator list")
    return table


def buchberger(gens, order=degrevlex, table=None):
    """Reduced Gröbner basis of ``gens`` under ``order``.

    Polynomials are monic and listed by decreasing leading monomial.  The zero
    ideal has the empty basis; the unit ideal has basis ``[1]``.
    """
    gens = list(gens)
    table = _common_table(gens, table)
    keys = _Keys(order)
    raw = _buchberger_raw([p.terms for p in gens], keys)
    return [Poly._raw(table, g) for _, g in raw]


def s_polynomial(f, g, order=degrevlex):
    lf, cf = f.leading(order)
    lg, cg = g.leading(order)
    return Poly._raw(
        f.table, _spoly({m: c / cf for m, c in f.terms.items()}, lf, {m: c / cg for m, c in g.terms.items()}, lg)
    )


def reduce_by(f, basis, order=degrevlex):
    """Full remainder of ``f`` on division by ``basis`` (any list of polys)."""
    keys = _Keys(order)
    raw = [_monic(g.terms, keys) for g in basis if g]
    return Poly._raw(f.table, _reduce(f.terms, raw, keys))


def is_groebner(basis, order=degrevlex):
    """True iff every S-polynomial of ``basis`` reduces to zero against it."""
    keys = _Keys(order)
    raw = [_monic(g.terms, keys) for g in basis if g]
    for (lf, f), (lg, g) in itertools.combinations(raw, 2):
        if _reduce(_spoly(f, lf, g, lg), raw, keys):
            return False
    return True


@dataclasses.dataclass(frozen=True)
class DimReport:
    krull_dim: int
    zero_dimensional: bool
    colength: int | None = None

    def __post_init__(self):
        if (self.colength is not None) != self.zero_dimensional:
            raise UsageError("colength must be present exactly when the ideal is zero-dimensional")

    @property
    def is_unit(self):
        return self.krull_dim == -1

    def as_dict(self):
        return {"krull_dim": self.krull_dim, "zero_dimensional": self.zero_dimensional, "colength": self.colength}


@dataclasses.dataclass(frozen=True)
class Finite:
    colength: int

    def __str__(self):
        return f"Finite({self.colength})"


@dataclasses.dataclass(frozen=True)
class UnknownBeyond:
    cap: int

    def __str__(self):
        return f"UnknownBeyond({self.cap})"


class Ideal:
    """Generators plus a lazily computed, cached reduced Gröbner basis.

    Ideals are immutable; the basis is computed at most once per instance.
    """

    def __init__(self, generators, order: MonomialOrder = degrevlex, table: VarTable | None = None):
        gens = tuple(generators)
        self.table = _common_table(gens, table)
        self.generators = tuple(g for g in gens if g)
        self.order = order

    @classmethod
    def unit(cls, table, order=degrevlex):
        return cls([Poly.constant(table, 1)], order, table)

    @functools.cached_property
    def _raw_basis(self):
        keys = _Keys(self.order)
        return keys, _buchberger_raw([g.terms for g in self.generators], keys)

    @property
    def basis(self):
        return tuple(Poly._raw(self.table, g) for _, g in self._raw_basis[1])

    @property
    def leading_monomials(self):
        return tuple(lm for lm, _ in self._raw_basis[1])

    def is_unit(self):
        b = self._raw_basis[1]
        return len(b) == 1 and not any(b[0][0])

    def is_zero(self):
        return not self._raw_basis[1]

    def with_order(self, order):
        if order == self.order:
            return self
        return Ideal(self.generators, order, self.table)

    def reduce(self, f):
        if f.table != self.table:
            raise UsageError("polynomial and ideal live on different variable tables")
        keys, raw = self._raw_basis
        return Poly._raw(self.table, _reduce(f.terms, raw, keys))

    def contains(self, f):
        return not self.reduce(f)

    __contains__ = contains

    def contains_ideal(self, other):
        return all(self.contains(g) for g in other.generators)

    def same_ideal(self, other):
        return self.contains_ideal(other) and other.contains_ideal(self)

    def __add__(self, other):
        if other.table != self.table:
            raise UsageError("sum of ideals on different variable tables")
        return Ideal(self.generators + other.generators, self.order, self.table)

    def embed(self, table, order=None):
        return Ideal([g.embed(table) for g in self.generators], order or self.order, table)

    def __repr__(self):
        return f"Ideal<{', '.join(str(g) for g in self.generators)}>"


def normal_form(f, ideal):
    return ideal.reduce(f)


def member(f, ideal):
    return ideal.contains(f)


def radical_member(f, ideal):
    """``f`` in rad(I), via 1 in I + <1 - y*f> with a fresh auxiliary y."""
    if f.table != ideal.table:
        raise UsageError("polynomial and ideal live on different variable tables")
    if ideal.contains(f):
        return True
    (y,) = ideal.table.fresh_names(["_rab"])
    big = ideal.table.with_aux([y])
    yv = Poly.var(big, y)
    gens = [g.embed(big) for g in ideal.generators] + [1 - yv * f.embed(big)]
    return Ideal(gens, degrevlex, big).is_unit()


def _indices(table, variables):
    return sorted({table.index(v) if isinstance(v, str) else int(v) for v in variables})


def eliminate(ideal, keep):
    """``I`` intersected with the subring in the ``keep`` variables.

    Returned generators live on the same table and only involve ``keep``.
    """
    table = ideal.table
    keep_idx = _indices(table, keep)
    drop = [i for i in range(len(table)) if i not in keep_idx]
    if not drop:
        return ideal
    order = BlockOrder(tuple(drop), len(table), DegRevLex(), DegRevLex())
    basis = buchberger(ideal.generators, order, table) if ideal.generators else []
    kept = [g for g in basis if g.used_indices() <= set(keep_idx)]
    return Ideal(kept, ideal.order, table)


def _max_independent(lms, nvars):
    """Size of the largest variable set containing no leading-monomial support.

    Equals ``n - (minimum hitting set of the supports)``.  Supports are
    bitmasks; those containing another support are dropped since hitting the
    smaller one hits the larger.
    """
    masks = set()
    for m in lms:
        mask = 0
        for i, e in enumerate(m):
            if e:
                mask |= 1 << i
        masks.add(mask)
    minimal = frozenset(s for s in masks if not any(t != s and t & s == t for t in masks))
    return nvars - _hitting_number(minimal)


@functools.lru_cache(maxsize=4096)
def _hitting_number(supports):
    """Minimum number of variables meeting every support, branching on the smallest one."""
    if not supports:
        return 0
    smallest = min(supports, key=lambda s: (s.bit_count(), s))
    best = None
    v = smallest
    while v:
        bit = v & -v
        v ^= bit
        val = 1 + _hitting_number(frozenset(s for s in supports if not s & bit))
        if best is None or val < best:
            best = val
    return best


def _standard_monomials(lms, nvars):
    """Monomials outside the monomial ideal ``<lms>`` (must be zero-dimensional)."""
    bounds = [None] * nvars
    for m in lms:
        support = [i for i, e in enumerate(m) if e]
        if len(support) == 1:
            i = support[0]
            bounds[i] = m[i] if bounds[i] is None else min(bounds[i], m[i])
    out = []
    for mon in itertools.product(*(range(b) for b in bounds)):
        if not any(mon_divides(lm, mon) for lm in lms):
            out.append(mon)
    return out


def krull_dim(ideal):
    """Krull dimension of ``R/I`` from the leading-term ideal of a basis."""
    if ideal.is_unit():
        return DimReport(-1, False, None)
    n = len(ideal.table)
    lms = ideal.leading_monomials
    dim = _max_independent(lms, n)
    if dim == 0:
        return DimReport(0, True, len(_standard_monomials(lms, n)))
    return DimReport(dim, False, None)


def standard_monomials(ideal):
    """Monomial basis of ``R/I`` for a zero-dimensional ideal."""
    report = krull_dim(ideal)
    if not report.zero_dimensional:
        raise UsageError("standard monomials are only finite for zero-dimensional ideals")
    return _standard_monomials(ideal.leading_monomials, len(ideal.table))


def _monomials_of_degree(nvars, degree):
    if nvars == 0:
        return [()] if degree == 0 else []
    out = []
    for first in range(degree, -1, -1):
        for rest in _monomials_of_degree(nvars - 1, degree - first):
            out.append((first,) + rest)
    return out


def _monomials_up_to(nvars, degree):
    return [m for d in range(degree + 1) for m in _monomials_of_degree(nvars, d)]


def _jet_span(gens, nvars, top):
    """Span of ``trunc_{<=top}(x^a * g)`` over generators and shifts."""
    span = IncrementalBasis()
    for g in gens:
        order = g.min_degree()
        if order > top:
            continue
        for a in _monomials_up_to(nvars, top - order):
            vec = {}
            for m, c in g.terms.items():
                mm = tuple(x + y for x, y in zip(m, a))
                if sum(mm) <= top:
                    vec[_col(mm)] = c
            span.add(vec)
    return span


def _col(mon):
    # low-degree columns first so pivots favour low-order terms
    return (sum(mon), tuple(-e for e in mon))


def local_colength(ideal, cap):
    """Codimension of ``I`` in the formal power series ring at the origin.

    For ``k = 1..cap`` checks ``m^k ⊆ I + m^(k+1)`` on jets; by Nakayama this
    forces ``m^k ⊆ I`` locally, and then the codimension equals
    ``dim C[Z]/(I + m^k)``.  Returns :class:`Finite` or :class:`UnknownBeyond`.
    """
    if cap < 1:
        raise UsageError("local_colength needs cap >= 1")
    gens = ideal.generators
    for g in gens:
        if g.constant_term():
            raise UsageError(f"generator {g} has a constant term; the ideal does not vanish at the origin")
    n = len(ideal.table)
    for k in range(1, cap + 1):
        span = _jet_span(gens, n, k)
        if all(span.contains({_col(m): 1}) for m in _monomials_of_degree(n, k)):
            below = _jet_span(gens, n, k - 1)
            total = len(_monomials_up_to(n, k - 1))
            return Finite(total - len(below))
    return UnknownBeyond(cap)


def preimage_under_map(ideal, components, target_table):
    """``{g in C[target] : g(F) in I}`` for ``F = components`` on ``ideal.table``.

    Computed by eliminating the source variables from
    ``I + <t_j - F_j(s)>`` in the joint table.
    """
    source = ideal.table
    components = list(components)
    if len(components) != len(target_table):
        raise UsageError(
            f"map has {len(components)} components but the target table has {len(target_table)} variables"
        )
    for f in components:
        if f.table != source:
            raise UsageError("map components must live on the ideal's variable table")
    src_names = target_table.fresh_names([f"_s_{x}" for x in source.names])
    joint = target_table.with_aux(src_names)
    src_map = [len(target_table) + k for k in range(len(source))]
    gens = [g.rename(joint, src_map) for g in ideal.generators]
    for j, f in enumerate(components):
        gens.append(Poly.var(joint, j) - f.rename(joint, src_map))
    elim = eliminate(Ideal(gens, degrevlex, joint), range(len(target_table)))
    back = list(range(len(target_table))) + [None] * len(source)
    return Ideal([g.rename(target_table, back) for g in elim.generators], degrevlex, target_table)


def ideal_equal(a, b):
    """Equality of ideals by two-way generator membership."""
    return a.same_ideal(b)
