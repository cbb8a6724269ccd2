"""Hypothesis strategies shared by the property tests."""
from fractions import Fraction

from hypothesis import strategies as st

from crlab.core import GaussRat, Poly, VarTable

small_fracs = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def gauss_rats(draw, complex_=True):
    re = draw(small_fracs)
    im = draw(small_fracs) if complex_ else Fraction(0)
    return GaussRat(re, im)


@st.composite
def polys(draw, table, max_terms=4, max_deg=3, complex_=False):
    n = len(table)
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        exps = draw(st.lists(st.integers(0, max_deg), min_size=n, max_size=n))
        while sum(exps) > max_deg:
            k = max(range(n), key=lambda j: exps[j])
            exps[k] -= 1
        c = draw(gauss_rats(complex_))
        if c:
            terms[tuple(exps)] = c
    return Poly(table, terms)


def table_of(n):
    return VarTable.holomorphic(["x", "y", "z", "u"][:n])
