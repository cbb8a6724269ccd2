"""Independent reference computations (sympy and brute force) for the tests."""
import itertools

import sympy

from crlab.core import GaussRat, Poly


def symbols_for(table):
    return sympy.symbols([n.replace("~", "c_") for n in table.names])


def to_sympy(p, syms):
    expr = 0
    for mon, c in p.terms.items():
        coeff = sympy.Rational(c.re.numerator, c.re.denominator) + sympy.I * sympy.Rational(
            c.im.numerator, c.im.denominator
        )
        expr += coeff * sympy.Mul(*(s**e for s, e in zip(syms, mon)))
    return sympy.expand(expr)


def from_sympy(expr, table, syms):
    poly = sympy.Poly(sympy.expand(expr), *syms)
    terms = {}
    for mon, c in poly.terms():
        re, im = sympy.re(c), sympy.im(c)
        terms[tuple(mon)] = GaussRat(sympy_fraction(re), sympy_fraction(im))
    return Poly(table, terms)


def sympy_fraction(r):
    from fractions import Fraction

    r = sympy.Rational(r)
    return Fraction(int(r.p), int(r.q))


def sympy_basis(gens, table, order):
    syms = symbols_for(table)
    exprs = [to_sympy(g, syms) for g in gens]
    if not exprs:
        return []
    from crlab.core import order_from_name

    gb = sympy.groebner(exprs, *syms, order={"lex": "lex", "degrevlex": "grevlex"}[order], domain="QQ")
    ours = order_from_name(order)
    basis = [from_sympy(g, table, syms).monic(ours) for g in gb.exprs]
    return sorted(basis, key=lambda g: ours.key(g.leading(ours)[0]), reverse=True)


def brute_monomial_dim(supports, nvars):
    """Largest variable subset containing no generator support."""
    best = -1
    for size in range(nvars, -1, -1):
        for subset in itertools.combinations(range(nvars), size):
            s = set(subset)
            if not any(sup <= s for sup in supports):
                return size
    return best


def brute_standard_count(lms, nvars, bound):
    """Monomials with every exponent below ``bound`` not divisible by any of ``lms``."""
    count = 0
    for mon in itertools.product(range(bound), repeat=nvars):
        if not any(all(a <= b for a, b in zip(lm, mon)) for lm in lms):
            count += 1
    return count


def kernel_of_substitution(ideal, components, target_table, degree):
    """Basis of ``{g : deg g <= degree, g(F) in I}`` by dense linear algebra."""
    n = len(target_table)
    monos = [m for d in range(degree + 1) for m in itertools.product(range(d + 1), repeat=n) if sum(m) == d]
    columns = []
    for m in monos:
        img = Poly.constant(ideal.table, 1)
        for f, e in zip(components, m):
            img = img * f**e
        columns.append(ideal.reduce(img))
    keys = sorted({k for c in columns for k in c.terms})
    rows = []
    for k in keys:
        row = []
        for c in columns:
            v = c.terms.get(k)
            row.append(0 if v is None else sympy.Rational(v.re.numerator, v.re.denominator)
                       + sympy.I * sympy.Rational(v.im.numerator, v.im.denominator))
        rows.append(row)
    if not rows:
        rows = [[0] * len(monos)]
    null = sympy.Matrix(rows).nullspace()
    out = []
    for vec in null:
        terms = {}
        for m, v in zip(monos, vec):
            if v != 0:
                terms[m] = GaussRat(sympy_fraction(sympy.re(v)), sympy_fraction(sympy.im(v)))
        out.append(Poly(target_table, terms))
    return out
