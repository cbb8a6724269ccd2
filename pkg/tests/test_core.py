from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from crlab.config import override_limits
from crlab.core import (
    GaussRat,
    I,
    IncrementalBasis,
    Poly,
    VarTable,
    adjugate,
    conj_involution,
    degrevlex,
    det,
    gauss,
    lex,
    rank,
)
from crlab.core.orders import BlockOrder
from crlab.errors import ResourceLimitError, UsageError
from crlab.parser import parse_poly

from strategies import gauss_rats, polys, table_of

T = VarTable.complexified(["z", "w"])
H2 = table_of(2)


def P(text, table=T):
    return parse_poly(text, table)


class TestGaussRat:
    def test_rendering(self):
        assert str(GaussRat(Fraction(3, 2))) == "3/2"
        assert str(GaussRat(0)) == "0"
        assert str(GaussRat(1, 2)) == "1+2i"
        assert str(GaussRat(0, -1)) == "-i"

    def test_i_squared(self):
        assert I * I == gauss(-1)

    def test_division_exact(self):
        a = GaussRat(1, 2)
        assert a / a == gauss(1)
        assert (a * a.conjugate()).is_real()

    def test_zero_division(self):
        with pytest.raises(ZeroDivisionError):
            gauss(0).inverse()

    @given(gauss_rats(), gauss_rats(), gauss_rats())
    def test_field_axioms(self, a, b, c):
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a
        if b:
            assert (a / b) * b == a

    @given(gauss_rats(), gauss_rats())
    def test_conjugation_is_ring_automorphism(self, a, b):
        assert (a * b).conjugate() == a.conjugate() * b.conjugate()
        assert (a + b).conjugate() == a.conjugate() + b.conjugate()


class TestVarTable:
    def test_complexified_layout(self):
        assert T.names == ("z", "w", "~z", "~w")
        assert T.pairing[T.index("z")] == T.index("~z")
        assert T.has_complete_pairing()

    def test_reserved_name(self):
        with pytest.raises(UsageError):
            VarTable.holomorphic(["i"])

    def test_duplicate_names(self):
        with pytest.raises(UsageError):
            VarTable.holomorphic(["z", "z"])

    def test_aux_and_fresh(self):
        t = T.with_aux(T.fresh_names(["z"]))
        assert t.aux_indices and t.names[-1] not in T.names


class TestPoly:
    def test_arithmetic(self):
        assert P("(z + w)^2") == P("z^2 + 2*z*w + w^2")
        assert P("z*w - w*z").is_zero()

    def test_rendering_round_trip(self):
        for text in ["-2*z + w", "(1 - 2*i)*z", "z^2*~z - 3/4", "i*w"]:
            p = P(text)
            assert P(str(p)) == p

    def test_degree_cap(self):
        with override_limits(max_degree=4):
            with pytest.raises(ResourceLimitError):
                P("z^5")

    def test_diff_and_compose(self):
        f = P("z^3*w")
        assert f.diff(T.index("z")) == P("3*z^2*w")
        g = f.compose([P("w"), P("z"), P("~z"), P("~w")], T)
        assert g == P("w^3*z")

    def test_collect(self):
        f = P("z^2*w + 3*z^2 + w")
        parts = f.collect([T.index("z")])
        assert parts[(2,)] == P("w + 3") and parts[(0,)] == P("w")

    def test_evaluate(self):
        assert P("z*~z + i").evaluate([gauss(2), 0, gauss(3), 0]) == GaussRat(6, 1)

    def test_conj_involution_swaps_and_conjugates(self):
        assert conj_involution(P("i*z*~w")) == P("-i*~z*w")

    def test_conj_involution_rejects_aux(self):
        t = T.with_aux(["s"])
        with pytest.raises(UsageError):
            conj_involution(Poly.var(t, "s"))

    @given(polys(T, complex_=True), polys(T, complex_=True))
    def test_conj_involution_is_involutive_automorphism(self, f, g):
        assert conj_involution(conj_involution(f)) == f
        assert conj_involution(f * g) == conj_involution(f) * conj_involution(g)

    @given(polys(H2), polys(H2), polys(H2))
    def test_ring_axioms(self, f, g, h):
        assert (f + g) * h == f * h + g * h
        assert f * g == g * f
        assert (f - f).is_zero()

    @given(polys(H2), polys(H2))
    def test_leibniz(self, f, g):
        for k in range(2):
            assert (f * g).diff(k) == f.diff(k) * g + f * g.diff(k)


class TestOrders:
    def test_lex_vs_degrevlex(self):
        assert lex.key((1, 0, 0)) > lex.key((0, 3, 0))
        assert degrevlex.key((0, 3, 0)) > degrevlex.key((1, 0, 0))
        # x*z < y^2 in degrevlex
        assert degrevlex.key((0, 2, 0)) > degrevlex.key((1, 0, 1))

    def test_block_order_eliminates_first_block(self):
        order = BlockOrder((0,), 3)
        assert order.key((1, 0, 0)) > order.key((0, 5, 5))

    @given(st.lists(st.integers(0, 3), min_size=3, max_size=3),
           st.lists(st.integers(0, 3), min_size=3, max_size=3),
           st.lists(st.integers(0, 3), min_size=3, max_size=3))
    def test_orders_are_multiplicative(self, a, b, c):
        for order in (lex, degrevlex, BlockOrder((0,), 3)):
            a_, b_, c_ = tuple(a), tuple(b), tuple(c)
            ac = tuple(x + y for x, y in zip(a_, c_))
            bc = tuple(x + y for x, y in zip(b_, c_))
            if order.key(a_) > order.key(b_):
                assert order.key(ac) > order.key(bc)
            assert order.key(ac) >= order.key(a_)


class TestLinalg:
    def test_rank(self):
        rows = [[1, 2, 0], [2, 4, 0], [0, 0, I]]
        assert rank(rows) == 2

    def test_incremental_basis(self):
        b = IncrementalBasis()
        assert b.add({0: gauss(1)})
        assert b.add({0: gauss(1), 1: I})
        assert not b.add({1: gauss(3)})
        assert b.contains({0: gauss(5)}) and len(b) == 2

    def test_det_and_adjugate(self):
        m = [[P("z"), P("w")], [P("1"), P("~z")]]
        d = det(m)
        assert d == P("z*~z - w")
        adj = adjugate(m)
        for r in range(2):
            for c in range(2):
                entry = sum((m[r][k] * adj[k][c] for k in range(2)), Poly.zero(T))
                assert entry == (d if r == c else Poly.zero(T))
