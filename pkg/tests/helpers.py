"""Shared strategies and independent oracles for the test suite."""

from fractions import Fraction

import sympy as sp
from hypothesis import strategies as st

from lca2.poly import MPoly, VARS

SYMS = sp.symbols("l m d x y")


def to_sympy(p: MPoly):
    out = sp.Integer(0)
    for exps, c in p.terms():
        term = sp.Rational(c.numerator, c.denominator)
        for s, e in zip(SYMS, exps):
            term *= s ** e
        out += term
    return sp.expand(out)


def from_sympy(expr) -> MPoly:
    poly = sp.Poly(sp.expand(expr), *SYMS)
    return MPoly({m: Fraction(int(c.p), int(c.q)) for m, c in poly.terms()})


coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def polys(variables=("lambda", "partial"), max_deg=3, max_terms=5):
    idx = [VARS.index(v) for v in variables]

    def build(items):
        terms = {}
        for exps, c in items:
            e = [0] * len(VARS)
            for i, k in zip(idx, exps):
                e[i] = k
            terms[tuple(e)] = terms.get(tuple(e), 0) + c
        return MPoly(terms)

    term = st.tuples(st.tuples(*[st.integers(0, max_deg)] * len(idx)), coeffs)
    return st.lists(term, max_size=max_terms).map(build)


def uni_polys(max_deg=3, nonzero=False):
    s = st.lists(st.integers(-3, 3), min_size=1, max_size=max_deg + 1).map(
        lambda cs: MPoly.from_univariate([Fraction(c) for c in cs])
    )
    return s.filter(lambda p: not p.is_zero()) if nonzero else s
