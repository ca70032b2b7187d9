from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from lca2.poly import (
    MPoly,
    PolyMatrix,
    LAM,
    MU,
    D,
    ZERO,
    ONE,
    bezout,
    gcd_uni,
    divmod_uni,
    hermite_form,
)
from helpers import SYMS, to_sympy, from_sympy, polys, uni_polys

l, m, d, x, y = SYMS


def test_square_of_virasoro_factor():
    assert to_sympy((2 * LAM + D) ** 2) == 4 * l**2 + 4 * l * d + d**2


def test_zero_and_constants():
    assert ZERO.is_zero() and not ZERO
    assert ONE.is_constant() and ONE.constant_term() == 1
    assert (LAM - LAM).is_zero()
    assert MPoly.const(Fraction(3, 4)).constant_term() == Fraction(3, 4)


def test_degrees():
    p = LAM**3 * D + 2 * D**2 + 5
    assert p.deg_in("lambda") == 3
    assert p.deg_in("partial") == 2
    assert p.total_degree() == 4
    assert ZERO.total_degree() == float("-inf")


def test_coefficient_access():
    p = 3 * LAM**2 * D - Fraction(1, 2) * D
    assert p.coefficient((2, 0, 1)) == 3
    assert p.coefficient(partial=1) == Fraction(-1, 2)
    assert p.coeff_in("lambda", 2) == 3 * D


def test_literal_roundtrip_keeps_big_numbers():
    p = MPoly.const(10**30) * LAM - Fraction(1, 10**25) * D**4
    assert MPoly.from_literal(p.to_literal()) == p
    assert p.to_literal()[0]["num"] == str(10**30)


def test_bezout_examples():
    g, s, t = bezout(D, D + 1)
    assert g == ONE and s * D + t * (D + 1) == ONE
    assert gcd_uni(D**2 - 1, D - 1) == D - 1


def test_hermite_small():
    H, U = hermite_form(PolyMatrix([[D, ZERO], [ONE, ZERO]]))
    assert H == PolyMatrix([[ONE, ZERO], [ZERO, ZERO]])
    assert U @ PolyMatrix([[D, ZERO], [ONE, ZERO]]) == H


@given(polys(("lambda", "mu", "partial")), polys(("lambda", "mu", "partial")))
def test_ring_operations_match_sympy(p, q):
    assert to_sympy(p + q) == sp.expand(to_sympy(p) + to_sympy(q))
    assert to_sympy(p - q) == sp.expand(to_sympy(p) - to_sympy(q))
    assert to_sympy(p * q) == sp.expand(to_sympy(p) * to_sympy(q))


@given(polys(("lambda", "partial")), polys(("lambda", "partial"), max_deg=1), polys(("mu", "partial"), max_deg=1))
@settings(max_examples=60)
def test_simultaneous_substitution_matches_sympy(p, a, b):
    got = p.substitute({"lambda": a, "partial": b})
    want = to_sympy(p).subs({l: to_sympy(a), d: to_sympy(b)}, simultaneous=True)
    assert to_sympy(got) == sp.expand(want)


@given(polys(("lambda", "mu", "partial")))
def test_sympy_roundtrip(p):
    assert from_sympy(to_sympy(p)) == p


@given(polys(("lambda", "partial")))
def test_homogeneous_components_sum_back(p):
    parts = p.homogeneous_components()
    total = ZERO
    for n, part in parts:
        assert all(sum(e) == n for e, _ in part.terms())
        total = total + part
    assert total == p


@given(polys(("lambda", "partial")), st.fractions(-3, 3, max_denominator=3), st.fractions(-3, 3, max_denominator=3))
def test_evaluate_matches_sympy(p, a, b):
    want = to_sympy(p).subs({l: sp.Rational(a.numerator, a.denominator), d: sp.Rational(b.numerator, b.denominator)})
    assert p.evaluate({"lambda": a, "partial": b}) == Fraction(int(sp.numer(want)), int(sp.denom(want)))


@given(uni_polys(5), uni_polys(3, nonzero=True))
def test_division_with_remainder(f, g):
    q, r = divmod_uni(f, g)
    assert q * g + r == f
    assert r.is_zero() or r.deg_in("partial") < g.deg_in("partial")


@given(uni_polys(4, nonzero=True), uni_polys(4, nonzero=True))
def test_bezout_identity_and_gcd_against_sympy(f, g):
    h, s, t = bezout(f, g)
    assert s * f + t * g == h
    want = sp.gcd(to_sympy(f), to_sympy(g))
    assert to_sympy(h) == sp.expand(want / sp.Poly(want, d).LC())


@given(st.lists(uni_polys(2), min_size=4, max_size=4))
def test_hermite_transform_is_unimodular(entries):
    M = PolyMatrix([entries[:2], entries[2:]])
    H, U = hermite_form(M)
    assert U @ M == H
    det = U.det()
    assert det.is_constant() and not det.is_zero()
    assert H[1, 0].is_zero()


@given(uni_polys(2), uni_polys(2))
def test_inverse_of_unimodular(p, q):
    M = PolyMatrix([[MPoly.const(2), p], [ZERO, ONE]]) @ PolyMatrix([[ONE, ZERO], [q, MPoly.const(-3)]])
    assert M @ M.inverse() == PolyMatrix.identity(2)


def test_inverse_rejects_non_unit_determinant():
    with pytest.raises(ValueError):
        PolyMatrix([[D, ZERO], [ZERO, ONE]]).inverse()


def test_eval_mod_agrees_with_exact():
    p = Fraction(1, 3) * LAM**2 * D - 7 * MU + 5
    prime = 32749
    exact = p.evaluate({"lambda": 4, "mu": 2, "partial": 9})
    assert p.eval_mod({"lambda": 4, "mu": 2, "partial": 9}, prime) == exact.numerator * pow(exact.denominator, -1, prime) % prime
