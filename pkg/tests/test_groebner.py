import itertools

from hypothesis import given
from hypothesis import strategies as st

from crlab.core import GaussRat, Poly, VarTable, degrevlex, lex
from crlab.groebner import (
    DimReport,
    Finite,
    Ideal,
    UnknownBeyond,
    buchberger,
    eliminate,
    is_groebner,
    krull_dim,
    local_colength,
    member,
    normal_form,
    preimage_under_map,
    radical_member,
    reduce_by,
    s_polynomial,
    standard_monomials,
)
from crlab.parser import parse_poly

import oracle
from strategies import polys, table_of

ZW = VarTable.holomorphic(["z", "w"])
Z3 = VarTable.holomorphic(["z1", "z2", "w"])
MONOMIALS_4 = [m for m in itertools.product(range(4), repeat=4) if 0 < sum(m) <= 3]


def P(text, table=ZW):
    return parse_poly(text, table)


def I_(texts, table=ZW, order=degrevlex):
    return Ideal([P(t, table) for t in texts], order, table)


class TestBuchberger:
    def test_lex_example(self):
        basis = buchberger([P("z^2 - w"), P("z*w - 1")], lex, ZW)
        assert P("w^3 - 1") in basis
        assert basis == oracle.sympy_basis([P("z^2 - w"), P("z*w - 1")], ZW, "lex")

    def test_already_reduced(self):
        for order in (lex, degrevlex):
            assert set(buchberger([P("z"), P("w")], order, ZW)) == {P("z"), P("w")}

    def test_zero_ideal(self):
        assert buchberger([Poly.zero(ZW)], degrevlex, ZW) == []

    def test_gaussian_coefficients(self):
        basis = buchberger([P("z^2 + 1"), P("z - i*w")], lex, ZW)
        assert is_groebner(basis, lex)
        assert member(P("w^2 - 1"), Ideal(basis, lex, ZW))

    @given(st.lists(polys(table_of(3), max_terms=3), min_size=1, max_size=3), st.sampled_from(["lex", "degrevlex"]))
    def test_matches_sympy(self, gens, order_name):
        table = table_of(3)
        order = lex if order_name == "lex" else degrevlex
        ours = buchberger(gens, order, table)
        assert ours == oracle.sympy_basis([g for g in gens if g], table, order_name)

    @given(st.lists(polys(table_of(3), max_terms=3), min_size=1, max_size=3))
    def test_s_polynomials_reduce_to_zero(self, gens):
        basis = buchberger(gens, degrevlex, table_of(3))
        for f, g in itertools.combinations(basis, 2):
            assert reduce_by(s_polynomial(f, g, degrevlex), basis, degrevlex).is_zero()

    @given(st.lists(polys(table_of(2), max_terms=3), min_size=1, max_size=3))
    def test_generators_are_members(self, gens):
        ideal = Ideal(gens, lex, table_of(2))
        assert all(ideal.contains(g) for g in gens)


class TestNormalForm:
    def test_examples(self):
        assert normal_form(P("z^2"), I_(["z"])).is_zero()
        assert normal_form(P("z^2 + w"), I_(["z"])) == P("w")

    @given(polys(table_of(3)), polys(table_of(3)), st.lists(polys(table_of(3), max_terms=3), min_size=1, max_size=2))
    def test_linear_and_idempotent(self, f, g, gens):
        ideal = Ideal(gens, degrevlex, table_of(3))
        nf = ideal.reduce
        assert nf(nf(f)) == nf(f)
        assert nf(f + g) == nf(f) + nf(g)
        assert nf(f.scale(GaussRat(3, 1))) == nf(f).scale(GaussRat(3, 1))

    @given(polys(table_of(2)), st.lists(polys(table_of(2), max_terms=3), min_size=1, max_size=2))
    def test_matches_sympy_reduction(self, f, gens):
        table = table_of(2)
        gens = [g for g in gens if g]
        if not gens:
            return
        import sympy

        syms = oracle.symbols_for(table)
        G = sympy.groebner([oracle.to_sympy(g, syms) for g in gens], *syms, order="grevlex", domain="QQ")
        _, rem = G.reduce(oracle.to_sympy(f, syms))
        assert Ideal(gens, degrevlex, table).reduce(f) == oracle.from_sympy(rem, table, syms)


class TestMembership:
    def test_examples(self):
        assert member(P("w^3 - 1"), I_(["z^2 - w", "z*w - 1"]))
        assert radical_member(P("z"), I_(["z^2"]))
        assert not member(P("z"), I_(["z^2"]))
        assert not radical_member(P("z + 1"), I_(["z^2"]))

    @given(polys(table_of(2), max_terms=3), st.integers(1, 3))
    def test_powers_lie_in_radical(self, f, k):
        ideal = Ideal([f**k], degrevlex, table_of(2))
        assert radical_member(f, ideal)


class TestEliminate:
    def test_examples(self):
        assert eliminate(I_(["z^2 - w"]), ["w"]).generators == ()
        assert eliminate(I_(["z - w", "z + w"]), ["w"]).same_ideal(I_(["w"]))
        ideal = I_(["z^2 - w", "z*w - 1"])
        assert eliminate(ideal, ["z", "w"]) is ideal

    def test_matches_lex_basis(self):
        ideal = I_(["z^2 - w", "z*w - 1"])
        kept = eliminate(ideal, ["w"])
        assert kept.same_ideal(I_(["w^3 - 1"]))

    @given(st.lists(polys(table_of(3), max_terms=3), min_size=1, max_size=3))
    def test_elimination_agrees_with_lex(self, gens):
        table = table_of(3)
        ours = eliminate(Ideal(gens, degrevlex, table), ["y", "z"])
        lex_basis = oracle.sympy_basis([g for g in gens if g], table, "lex")
        expected = [g for g in lex_basis if g.used_indices() <= {1, 2}]
        assert ours.same_ideal(Ideal(expected, degrevlex, table))


class TestKrullDim:
    def test_examples(self):
        assert krull_dim(I_(["z", "w"])) == DimReport(0, True, 1)
        assert krull_dim(I_(["z^2", "w"])) == DimReport(0, True, 2)
        assert standard_monomials(I_(["z^2", "w"])) == [(0, 0), (1, 0)]
        assert krull_dim(I_(["w", "z1"], Z3)).krull_dim == 1
        assert krull_dim(I_(["z", "1 + z"])).is_unit
        assert krull_dim(Ideal([], degrevlex, ZW)).krull_dim == 2

    @given(st.lists(st.sampled_from(MONOMIALS_4), min_size=1, max_size=5))
    def test_monomial_ideals_against_brute_force(self, exps):
        table = table_of(4)
        gens = [Poly(table, {tuple(e): GaussRat(1)}) for e in exps]
        supports = [{i for i, x in enumerate(e) if x} for e in exps]
        report = krull_dim(Ideal(gens, degrevlex, table))
        assert report.krull_dim == oracle.brute_monomial_dim(supports, 4)
        if report.zero_dimensional:
            assert report.colength == oracle.brute_standard_count(exps, 4, 4)

    @given(st.lists(polys(table_of(3), max_terms=3), min_size=1, max_size=3))
    def test_order_independent(self, gens):
        table = table_of(3)
        a = krull_dim(Ideal(gens, lex, table))
        b = krull_dim(Ideal(gens, degrevlex, table))
        assert a == b


class TestLocalColength:
    def test_examples(self):
        assert local_colength(I_(["z^2", "w"]), 8) == Finite(2)
        assert local_colength(I_(["z", "0"]), 6) == UnknownBeyond(6)
        assert local_colength(I_(["z", "w"]), 8) == Finite(1)

    def test_milnor_numbers(self):
        # Jacobian ideals of A_k / D_4 singularities
        assert local_colength(I_(["2*z", "3*w^2"]), 8) == Finite(2)          # A_2
        assert local_colength(I_(["3*z^2", "5*w^4"]), 10) == Finite(8)       # x^3 + y^5, mu = 2*4
        assert local_colength(I_(["3*z^2 + w^2", "2*z*w"]), 8) == Finite(4)  # D_4

    def test_local_differs_from_global(self):
        # <z*(1 - z)>, <w>: two points globally, one at the origin
        ideal = I_(["z - z^2", "w"])
        assert krull_dim(ideal).colength == 2
        assert local_colength(ideal, 8) == Finite(1)

    @given(st.lists(polys(table_of(2), max_terms=3), min_size=1, max_size=3).map(
        lambda gs: [g - Poly.constant(g.table, g.constant_term()) for g in gs]))
    def test_monomial_ideal_and_homogeneous_agree_with_global(self, gens):
        table = table_of(2)
        # homogeneous parts only: the global zero set is a cone, so local = global
        homog = []
        for g in gens:
            if g:
                d = g.min_degree()
                homog.append(Poly(table, {m: c for m, c in g.terms.items() if sum(m) == d}))
        ideal = Ideal(homog, degrevlex, table)
        report = krull_dim(ideal)
        local = local_colength(ideal, 7)
        if report.zero_dimensional:
            assert local == Finite(report.colength) or local == UnknownBeyond(7)
            if report.colength <= 6:
                assert local == Finite(report.colength)
        else:
            assert local == UnknownBeyond(7)

    @given(st.integers(1, 4), st.integers(1, 4), polys(table_of(2), max_terms=2, max_deg=3))
    def test_higher_order_perturbation(self, a, b, noise):
        # <x^a + h.o.t., y^b + h.o.t.> has local colength a*b when the noise is of higher order
        table = table_of(2)
        x, y = Poly.var(table, 0), Poly.var(table, 1)
        hot = Poly(table, {m: c for m, c in noise.terms.items() if sum(m) > max(a, b)})
        ideal = Ideal([x**a + hot, y**b], degrevlex, table)
        assert local_colength(ideal, a + b + 2) == Finite(a * b)


class TestPreimage:
    def test_examples(self):
        target = VarTable.holomorphic(["zt", "wt"])
        F = [P("z^2"), P("w")]
        assert preimage_under_map(I_(["z^2"]), F, target).same_ideal(I_(["zt"], target))
        assert preimage_under_map(I_(["w"]), F, target).same_ideal(I_(["wt"], target))

    @given(st.lists(polys(ZW, max_terms=3), min_size=1, max_size=2))
    def test_identity(self, gens):
        ideal = Ideal(gens, degrevlex, ZW)
        assert preimage_under_map(ideal, Poly.gens(ZW), ZW).same_ideal(ideal)

    @given(
        st.lists(polys(ZW, max_terms=2, max_deg=2), min_size=1, max_size=2),
        st.lists(polys(ZW, max_terms=2, max_deg=2), min_size=2, max_size=2),
    )
    def test_sound_and_complete_in_low_degree(self, gens, comps):
        target = VarTable.holomorphic(["s", "t"])
        ideal = Ideal(gens, degrevlex, ZW)
        pre = preimage_under_map(ideal, comps, target)
        for g in pre.generators:
            assert member(g.compose(comps, ZW), ideal)
        for g in oracle.kernel_of_substitution(ideal, comps, target, 2):
            assert pre.contains(g)
