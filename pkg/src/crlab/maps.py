"""Formal holomorphic map jets and the analyticity / convergence criterion.

A map ``H: (C^N, 0) -> (C^N, 0)`` is given by polynomial components on the
holomorphic table of its source.  The conjugate map is never stored; it is
derived on demand by the reality involution.
"""
from __future__ import annotations

import dataclasses

from .core.poly import Poly, conj_involution, det
from .errors import InvariantError, UsageError
from .finite_type import DEFAULT_BRACKET_CAP, TypeReport, finite_type_order
from .groebner import DimReport, Finite, Ideal, UnknownBeyond, krull_dim, local_colength, preimage_under_map
from .varieties import (
    CAVEAT_GENERATORS,
    CAVEAT_GLOBAL_DIM,
    EssentialReport,
    essential_variety,
    segre_at,
    segre_containment_ideal,
)


class FormalMapJet:
    """Polynomial jet of a formal map; no component may have a constant term."""

    def __init__(self, components, degree_cap=None, source=None):
        comps = []
        table = source
        for c in components:
            if isinstance(c, str):
                if table is None:
                    raise UsageError("string components need an explicit source table")
                from .parser import parse_poly

                c = parse_poly(c, table)
            comps.append(c)
        if not comps:
            raise UsageError("a map needs at least one component")
        table = table or comps[0].table
        for c in comps:
            if c.table != table:
                raise UsageError("map components live on different tables")
            if c.constant_term():
                raise InvariantError("no-constant-term", f"component {c} has a constant term")
        top = max(c.degree() for c in comps)
        if degree_cap is None:
            degree_cap = max(top, 1)
        if top > degree_cap:
            raise InvariantError("degree-cap", f"component degree {top} exceeds the jet cap {degree_cap}")
        self.components = tuple(comps)
        self.degree_cap = degree_cap
        self.source = table

    @classmethod
    def identity(cls, table):
        return cls(Poly.gens(table), 1, table)

    def __len__(self):
        return len(self.components)

    def ideal(self):
        return Ideal(self.components, table=self.source)

    def on(self, table):
        """Components embedded in the Z-block of ``table`` (matched by name)."""
        return [c.embed(table) for c in self.components]

    def conj_on(self, table):
        """The conjugate jet ``conj(H)(zeta)`` as polynomials on a complexified table."""
        return [conj_involution(c) for c in self.on(table)]

    def __repr__(self):
        return f"FormalMapJet({', '.join(str(c) for c in self.components)})"


def is_finite_map(H, cap):
    return local_colength(H.ideal(), cap)


def jacobian_determinant(H):
    names = H.source.names
    if len(H) != len(names):
        raise UsageError("Jacobian determinant needs as many components as variables")
    return det([[c.diff(k) for k in range(len(names))] for c in H.components])


def jacobian_nonvanishing(H):
    return not jacobian_determinant(H).is_zero()


def _check_tables(H, M, Xt):
    if tuple(H.source.names) != tuple(M.z_table.names):
        raise UsageError(
            f"map source variables ({', '.join(H.source.names)}) differ from the source variety's "
            f"({', '.join(M.z_table.names)})"
        )
    if len(H) != Xt.N:
        raise UsageError(f"map has {len(H)} components but the target lives in C^{Xt.N}")


def maps_into(H, M, Xt):
    """Whether ``sigma_t(H(Z), conj(H)(zeta))`` lies in ``<sigma>`` for every target generator."""
    _check_tables(H, M, Xt)
    images = H.on(M.table) + H.conj_on(M.table)
    return all(M.ideal.contains(s.compose(images, M.table)) for s in Xt.sigma)


@dataclasses.dataclass(frozen=True)
class CriterionSatisfied:
    def __str__(self):
        return "CriterionSatisfied"


@dataclasses.dataclass(frozen=True)
class Inconclusive:
    reason: str

    def __str__(self):
        return f"Inconclusive({self.reason})"


@dataclasses.dataclass(frozen=True)
class SegrePreimageReport:
    finite: object
    maps_into: bool
    status: object  # "verified", "failed" or Inconclusive
    preimage: Ideal | None = None
    target_segre: Ideal | None = None
    ideals_equal: bool | None = None
    source_dim: DimReport | None = None
    target_dim: DimReport | None = None
    dims_equal: bool | None = None


def verify_segre_preimage_identity(H, M, Xt, cap=8):
    """Check that pulling ``I(Sigma_0)`` back along H gives ``I(Sigma~_0)``."""
    _check_tables(H, M, Xt)
    finite = is_finite_map(H, cap)
    into = maps_into(H, M, Xt)
    if not isinstance(finite, Finite):
        return SegrePreimageReport(finite, into, Inconclusive(f"map finiteness unknown beyond order {cap}"))
    if not into:
        return SegrePreimageReport(finite, into, Inconclusive("map does not send source into target"))
    segre = segre_at(M)
    pre = preimage_under_map(segre, H.components, Xt.z_table)
    target = segre_at(Xt)
    equal = pre.same_ideal(target)
    d_src, d_tgt = krull_dim(segre), krull_dim(target)
    ok = equal and d_src.krull_dim == d_tgt.krull_dim
    return SegrePreimageReport(
        finite, into, "verified" if ok else "failed",
        Ideal(pre.basis, table=pre.table), Ideal(target.basis, table=target.table),
        equal, d_src, d_tgt, d_src.krull_dim == d_tgt.krull_dim,
    )


@dataclasses.dataclass(frozen=True)
class CriterionResult:
    ideal: Ideal
    dim: DimReport

    @property
    def satisfied(self):
        return self.dim.zero_dimensional


def criterion_variety(H, M, Xt):
    """Target points ``Zt`` whose Segre ideal pulls back into ``I(Sigma_0)``."""
    _check_tables(H, M, Xt)
    C = segre_containment_ideal(Xt.sigma, Xt.table, segre_at(M), list(H.components))
    C = Ideal(C.basis, table=C.table)
    return CriterionResult(C, krull_dim(C))


@dataclasses.dataclass(frozen=True)
class Caps:
    bracket_cap: int = DEFAULT_BRACKET_CAP
    colength_cap: int = 8
    jet_cap: int = 8


@dataclasses.dataclass(frozen=True)
class VerdictReport:
    finite_type: TypeReport
    source_essential: EssentialReport
    map_finite: object
    maps_into: bool
    criterion: CriterionResult
    verdict: object
    gaps: tuple
    caveats: tuple

    @property
    def source_ess_finite(self):
        return self.source_essential.essentially_finite

    @property
    def criterion_ideal(self):
        return self.criterion.ideal

    @property
    def criterion_dim(self):
        return self.criterion.dim


def analyticity_verdict(M, Xt, H, caps=Caps()):
    """Run every prerequisite and the criterion; the first failing check names the gap."""
    ftype = finite_type_order(M, caps.bracket_cap)
    ess = essential_variety(M)
    finite = is_finite_map(H, caps.colength_cap)
    into = maps_into(H, M, Xt)
    crit = criterion_variety(H, M, Xt)
    gaps = []
    if not ftype.is_finite:
        gaps.append(f"source finite type undetermined beyond bracket length {caps.bracket_cap}")
    if not ess.essentially_finite:
        gaps.append("source not essentially finite")
    if isinstance(finite, UnknownBeyond):
        gaps.append(f"map finiteness unknown beyond order {caps.colength_cap}")
    if not into:
        gaps.append("map does not send source into target")
    if not crit.satisfied:
        gaps.append("criterion variety is positive-dimensional")
    verdict = Inconclusive(gaps[0]) if gaps else CriterionSatisfied()
    caveats = list(ess.caveats)
    if not all(len(g) == 1 for g in crit.ideal.generators) and CAVEAT_GLOBAL_DIM not in caveats:
        caveats.append(CAVEAT_GLOBAL_DIM)
    if CAVEAT_GENERATORS not in caveats:
        caveats.append(CAVEAT_GENERATORS)
    caveats.append(
        "criterion satisfied is a sufficient condition for real-analyticity / convergence of the map, "
        "not a certificate of it for non-polynomial data"
    )
    return VerdictReport(ftype, ess, finite, into, crit, verdict, tuple(gaps), tuple(caveats))

