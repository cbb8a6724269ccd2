"""Real-analytic varieties given by polynomial data, their Segre varieties and
essential varieties, and witness checks for the equivalent descriptions of
non-essential-finiteness.

A variety ``X`` in ``C^N`` is described by ``sigma_1..sigma_d`` in the
complexified coordinates ``(Z, ~Z)``, where ``~Z`` stands for the conjugate
variables.  Everything is exact; germ statements are replaced by statements
about the polynomial ideals, and every report that leans on that substitution
carries a caveat.
"""
from __future__ import annotations

import dataclasses

from .core.linalg import rank
from .core.numbers import ZERO, gauss
from .core.orders import BlockOrder, DegRevLex, degrevlex
from .core.poly import Poly, conj_involution
from .core.variables import VarTable
from .errors import InvariantError, UsageError
from .groebner import DimReport, Ideal, buchberger, krull_dim, radical_member, reduce_by

CAVEAT_GENERATORS = (
    "the supplied defining polynomials are taken as generators of the real ideal; "
    "radicality of the Segre ideal at 0 is not certified"
)
CAVEAT_GLOBAL_DIM = (
    "dimension computed for the polynomial ideal (global); it equals the germ dimension at 0 "
    "only when no other component meets the computation"
)


class RealVariety:
    """Real-analytic variety through 0 with polynomial defining functions.

    ``names`` are the holomorphic coordinates ``Z``; ``sigma`` are polynomials
    (or strings in the expression language) on the complexified table.
    Construction validates that each ``sigma_i`` vanishes at the origin and
    that ``<sigma>`` is stable under the reality involution.
    """

    def __init__(self, names, sigma, dim_hint=None, *, label=None, segre_irreducible=None):
        self.table = VarTable.complexified(names)
        polys = []
        for s in sigma:
            if isinstance(s, str):
                from .parser import parse_poly

                s = parse_poly(s, self.table)
            elif s.table != self.table:
                s = s.embed(self.table)
            polys.append(s)
        self.sigma = tuple(p for p in polys if p)
        if not self.sigma:
            raise InvariantError("defining-data", "at least one non-zero defining polynomial is required")
        self.dim_hint = dim_hint
        self.label = label
        # user-asserted metadata: primary decomposition is out of scope
        self.segre_irreducible = segre_irreducible
        self._validate()

    def _validate(self):
        for s in self.sigma:
            if s.constant_term():
                raise InvariantError("passes-through-origin", f"defining polynomial {s} does not vanish at 0")
        ideal = self.ideal
        for s in self.sigma:
            if not ideal.contains(conj_involution(s)):
                raise InvariantError(
                    "reality", f"conjugate of {s} is {conj_involution(s)}, which is not in the defining ideal"
                )

    @property
    def N(self):
        return len(self.table) // 2

    @property
    def d(self):
        return len(self.sigma)

    @property
    def z_table(self):
        return self.table.holomorphic_part()

    @property
    def ideal(self):
        try:
            return self._ideal
        except AttributeError:
            self._ideal = Ideal(self.sigma, degrevlex, self.table)
            return self._ideal

    def __repr__(self):
        body = "; ".join(str(s) for s in self.sigma)
        return f"{type(self).__name__}({', '.join(self.z_table.names)}: {body})"


class GenericSubmanifold(RealVariety):
    """A RealVariety whose holomorphic differentials ``dsigma/dZ`` have rank d at 0."""

    def _validate(self):
        super()._validate()
        origin = [0] * len(self.table)
        rows = [[s.diff(k).evaluate(origin) for k in self.table.z_indices] for s in self.sigma]
        if rank(rows) != self.d:
            raise InvariantError(
                "genericity", f"dsigma/dZ at 0 has rank {rank(rows)}, expected {self.d}"
            )

    @property
    def codim(self):
        return self.d


@dataclasses.dataclass(frozen=True)
class EssentialReport:
    ideal_of_E0: Ideal
    dim: DimReport
    essentially_finite: bool
    caveats: tuple = ()

    def __post_init__(self):
        if self.essentially_finite != self.dim.zero_dimensional:
            raise UsageError("essentially_finite must agree with zero-dimensionality")


# ---------------------------------------------------------------------------


def _to_z_table(p, table):
    """Move a polynomial in Z-variables of ``table`` onto the holomorphic table."""
    z = table.holomorphic_part()
    index_map = [i if i < len(z) else None for i in range(len(table))]
    return p.rename(z, index_map)


def _from_z_table(p, table):
    """Embed a holomorphic polynomial into the Z-block of ``table``."""
    return p.rename(table, list(table.z_indices))


def segre_at(X, point=None):
    """Ideal ``<sigma(Z, conj(p))>`` on the holomorphic table; ``p = 0`` by default."""
    n = X.N
    point = [ZERO] * n if point is None else [gauss(c) for c in point]
    if len(point) != n:
        raise UsageError(f"point needs {n} coordinates")
    z = X.z_table
    images = list(Poly.gens(z)) + [Poly.constant(z, c.conjugate()) for c in point]
    gens = [s.compose(images, z) for s in X.sigma]
    return Ideal(gens, degrevlex, z)


def complexification(X):
    return X.ideal


def segre_star(X):
    """``I(Sigma_0^*)``: the conjugated Segre ideal, living in the zeta-block."""
    gens = [conj_involution(_from_z_table(g, X.table)) for g in segre_at(X).generators]
    return Ideal(gens, degrevlex, X.table)


def _w_copy(table, z_count):
    """Prepend an auxiliary copy W of the first ``z_count`` variables."""
    names = table.fresh_names([f"_W_{table.names[k]}" for k in range(z_count)])
    return table.with_aux(names, front=True)


def _coefficient_ideal(remainders, w_count, joint, base):
    """Conjugated W-coefficients of ``remainders`` as polynomials on ``base.holomorphic_part()``."""
    back = [None] * w_count + list(range(len(base)))
    out = []
    for r in remainders:
        for _, coeff in sorted(r.collect(range(w_count)).items()):
            c = coeff.rename(base, back)
            out.append(_to_z_table(conj_involution(c), base))
    return out


def segre_containment_ideal(sigma_target, target_table, source_segre, images, inner_order=degrevlex):
    """Ideal of target points ``Zt`` with ``sigma_target(images(W), conj(Zt))`` in ``I(source_segre)``.

    ``images`` are polynomials on the holomorphic table of ``source_segre``
    giving the Z-substitution (the identity for the essential variety, the map
    components for the criterion variety).
    """
    src_z = source_segre.table
    w = len(src_z)
    joint = _w_copy(target_table, w)
    to_w = list(range(w))
    w_images = [img.rename(joint, to_w) for img in images]
    zeta = [Poly.var(joint, w + i) for i in target_table.zeta_indices]
    full_images = w_images + zeta
    G = buchberger(source_segre.generators, inner_order, src_z) if source_segre.generators else []
    G = [g.rename(joint, to_w) for g in G]
    order = BlockOrder(tuple(range(w)), len(joint), inner_order, DegRevLex())
    remainders = []
    for s in sigma_target:
        pulled = s.compose(full_images, joint)
        remainders.append(reduce_by(pulled, G, order))
    gens = _coefficient_ideal(remainders, w, joint, target_table)
    return Ideal(gens, degrevlex, target_table.holomorphic_part())


def essential_variety(X, order=degrevlex):
    """Essential variety ``E_0`` of ``X`` at 0 via ``A = {Z : Sigma_0 ⊂ Sigma_Z}``.

    ``order`` is the inner order used for the Segre basis and the reduction;
    the returned ideal is always presented by its reduced degrevlex basis.
    """
    segre = segre_at(X)
    images = list(Poly.gens(X.z_table))
    A = segre_containment_ideal(X.sigma, X.table, segre, images, order)
    A = Ideal(A.basis, degrevlex, A.table)
    dim = krull_dim(A)
    caveats = [CAVEAT_GENERATORS]
    if not all(len(g) == 1 for g in A.generators):
        caveats.append(CAVEAT_GLOBAL_DIM)
    return EssentialReport(A, dim, dim.zero_dimensional, tuple(caveats))


def _check_z_ideal(X, J, what):
    if J.table != X.z_table:
        raise UsageError(f"{what} must live on the holomorphic table ({', '.join(X.z_table.names)})")
    if J.is_unit():
        raise UsageError(f"{what} is the unit ideal")
    for g in J.generators:
        if g.constant_term():
            raise UsageError(f"{what} does not vanish at 0 (generator {g})")


def check_condition_c(X, J):
    """Whether ``I(X_c) ⊂ J(Z) + I(Sigma_0^*)(zeta)`` by ideal membership."""
    _check_z_ideal(X, J, "J")
    big = Ideal([_from_z_table(g, X.table) for g in J.generators] + list(segre_star(X).generators),
                degrevlex, X.table)
    return all(big.contains(s) for s in X.sigma)


def check_condition_b(X, gamma):
    """Whether ``Gamma x Sigma_0^* ⊂ X_c``, i.e. each sigma_i lies in the radical of
    ``I(Gamma)(Z) + I(Sigma_0^*)(zeta)``.

    Only the containment is checked; positivity of ``dim Gamma`` is the
    caller's to read off :func:`~crlab.groebner.krull_dim`.
    """
    _check_z_ideal(X, gamma, "Gamma")
    big = Ideal([_from_z_table(g, X.table) for g in gamma.generators] + list(segre_star(X).generators),
                degrevlex, X.table)
    return all(radical_member(s, big) for s in X.sigma)


def check_condition_d(X, mu, jet_cap):
    """Whether the curve ``mu(s)`` satisfies ``sigma(mu(s), conj(p)) == 0`` for p in Sigma_0.

    Each s-coefficient (orders ``0..jet_cap``) of ``sigma_i(mu(s), zeta)`` must
    lie in the radical of ``I(Sigma_0^*)``.
    """
    mu = list(mu)
    if len(mu) != X.N:
        raise UsageError(f"mu needs {X.N} components")
    s_table = next((m.table for m in mu if isinstance(m, Poly)), None)
    if s_table is None or len(s_table) != 1:
        raise UsageError("mu components must be polynomials in a single variable")
    if all(not m for m in mu):
        raise UsageError("mu is the trivial curve")
    for m in mu:
        if m.table != s_table:
            raise UsageError("mu components live on different tables")
        if m.constant_term():
            raise UsageError(f"mu component {m} has a constant term")
    (s_name,) = X.table.fresh_names(["_s"])
    joint = X.table.with_aux([s_name])
    s_pos = len(X.table)
    images = [m.rename(joint, [s_pos]) for m in mu] + [Poly.var(joint, k) for k in X.table.zeta_indices]
    star = segre_star(X)
    back = list(range(len(X.table))) + [None]
    for sig in X.sigma:
        pulled = sig.compose(images, joint)
        for (power,), coeff in sorted(pulled.collect([s_pos]).items()):
            if power > jet_cap:
                continue
            if not radical_member(coeff.rename(X.table, back), star):
                return False
    return True


def segre_passes_through_origin(X):
    """For p in Sigma_0, Sigma_p contains 0: ``sigma(0, zeta)`` vanishes on Sigma_0^*."""
    zero_z = [Poly.zero(X.table)] * X.N + [Poly.var(X.table, k) for k in X.table.zeta_indices]
    star = segre_star(X)
    return all(radical_member(s.compose(zero_z, X.table), star) for s in X.sigma)


def is_reality_stable(X):
    return all(X.ideal.contains(conj_involution(s)) for s in X.sigma)
