import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lca2.poly import MPoly, PolyMatrix, LAM, D, ZERO, ONE
from lca2.lca_core import (
    LCA2,
    Element,
    BracketValue,
    GEN,
    TABLE_ROWS,
    AlgebraFormatError,
    make_algebra,
    bracket,
    nth_products,
    check_axioms_lambda,
    check_axioms_nth,
    validate,
    transform,
    commutative2,
    vir,
    r_ss,
    r_cs,
    current2,
    r_nil,
    r_sol,
    r_cdq,
    classify_rank1,
    table_coordinates,
    table_polynomial,
    algebra_from_json,
    algebra_to_json,
    rank1_from_json,
    read_json,
)
from lca2.normalize import scramble
from helpers import to_sympy, uni_polys
from oracles import is_valid, lambda_axiom_residuals, transform_sympy

V = 2 * LAM + D
U = LAM**2 + LAM * D

FAMILY = [
    commutative2(),
    vir(),
    r_ss(),
    r_cs(),
    current2(1, 0),
    current2(2, -3),
    r_nil(V),
    r_nil(V * D**2 + 2 * V * U),
    r_sol(LAM**2 + 1),
    r_cdq(2, 1),
    r_cdq(1, 0, V),
    r_cdq(0, 0, V * U - V * D),
    r_cdq(-1, 0, V * D**2),
    r_cdq(-4, 0, V * U**3),
    r_cdq(-6, 0, TABLE_ROWS[-6][0]),
]


def test_vir_bracket():
    assert bracket(vir(), GEN[0], GEN[0]) == BracketValue(V, ZERO)


def test_sol_bracket_on_shifted_element():
    a = LAM**2 + 3
    f = D**2 - D
    got = bracket(r_sol(a), Element(ZERO, ONE), Element(f, ZERO))
    assert got == BracketValue(f.substitute({"partial": LAM + D}) * a, ZERO)


@given(uni_polys(2), uni_polys(2), uni_polys(2), uni_polys(2))
@settings(max_examples=30)
def test_sesquilinearity_left(f1, f2, g1, g2):
    R = r_cdq(-1, 0, V * D**2)
    u, v = Element(f1, f2), Element(g1, g2)
    du = Element(D * f1, D * f2)
    lhs = bracket(R, du, v)
    rhs = bracket(R, u, v)
    assert lhs == BracketValue(-LAM * rhs.x1, -LAM * rhs.x2)


@given(uni_polys(2), uni_polys(2), uni_polys(2), uni_polys(2))
@settings(max_examples=30)
def test_bracket_skew_on_elements(f1, f2, g1, g2):
    R = r_cdq(0, 0, V * U + V * D)
    u, v = Element(f1, f2), Element(g1, g2)
    a, b = bracket(R, u, v), bracket(R, v, u)
    flip = {"lambda": -LAM - D}
    assert a.x1 == -b.x1.substitute(flip) and a.x2 == -b.x2.substitute(flip)


def test_nth_products_examples():
    assert nth_products(BracketValue(V, ZERO)) == [(0, Element(D, ZERO)), (1, Element(MPoly.const(2), ZERO))]
    assert nth_products(BracketValue(ZERO, ZERO)) == []
    assert nth_products(BracketValue(LAM**2, ZERO)) == [(2, Element(MPoly.const(2), ZERO))]


@given(uni_polys(2), uni_polys(2))
@settings(max_examples=30)
def test_nth_products_reassemble(f, g):
    from math import factorial

    bv = bracket(r_cdq(-4, 0, V * U**3), Element(f, g), Element(g, f))
    parts = nth_products(bv)
    x1 = sum((e.x1 * LAM**n * Fraction(1, factorial(n)) for n, e in parts), ZERO)
    x2 = sum((e.x2 * LAM**n * Fraction(1, factorial(n)) for n, e in parts), ZERO)
    assert BracketValue(x1, x2) == bv


@pytest.mark.parametrize("R", FAMILY, ids=lambda R: str(R)[:40])
def test_constructors_validate_under_both_checkers_and_oracle(R):
    assert R.validated
    assert check_axioms_lambda(R).valid
    assert check_axioms_nth(R).valid
    assert is_valid(R)


def test_named_shapes():
    assert r_ss().q[0][1] == BracketValue(ZERO, ZERO)
    assert r_ss().q[1][1] == BracketValue(ZERO, V)
    assert current2(0, 0) == commutative2()
    assert r_cdq(1, 0).q[1][0] == BracketValue(LAM + D, ZERO)


def test_lambda_corruption_is_reported():
    R = make_algebra((LAM, ZERO), (ZERO, ZERO), (ZERO, ZERO))
    rep = check_axioms_lambda(R)
    assert not rep.valid
    assert rep.residuals[("skew", 1, 1, 1)] == LAM + (-LAM - D)
    assert not check_axioms_nth(R).valid
    with pytest.raises(ValueError):
        validate(R)


def test_explicit_21_entry_is_checked():
    R = make_algebra((ZERO, ZERO), (ZERO, ZERO), (ZERO, V), q21=(LAM, ZERO))
    assert not check_axioms_lambda(R).valid


def test_r_cdq_refuses_table_violations():
    with pytest.raises(ValueError):
        r_cdq(1, 1, V)
    with pytest.raises(ValueError):
        r_cdq(5, 0, V)
    with pytest.raises(ValueError):
        r_cdq(0, 0, V * U**3)
    with pytest.raises(ValueError):
        r_cdq(1, 0, LAM)


def test_rank1_examples():
    assert classify_rank1(ZERO).kind == "Commutative"
    v = classify_rank1(3 * V)
    assert v.kind == "Virasoro" and v.alpha == 3
    bad = classify_rank1(V * D**2)
    assert bad.kind == "Invalid" and bad.residual
    assert classify_rank1(LAM).kind == "Invalid"


def test_table_coordinates():
    assert table_coordinates(0, 3 * TABLE_ROWS[0][0] - 2 * TABLE_ROWS[0][1]) == (3, -2)
    assert table_coordinates(-4, V * U) is None
    assert table_coordinates(7, V) is None
    assert table_polynomial(-1, 1, 1) == TABLE_ROWS[-1][0] + TABLE_ROWS[-1][1]


@pytest.mark.parametrize("seed", range(4))
def test_transform_matches_sympy_oracle(seed):
    R = r_cdq(0, 0, V * U + V * D)
    _, T = scramble(R, seed, 2)
    got = transform(R, T.m)
    want = transform_sympy(R, T.m)
    for i in range(2):
        for j in range(2):
            for k in range(2):
                assert to_sympy(got.q[i][j][k]) == want[i][j][k]


def test_transform_by_shift_keeps_validity():
    R = transform(r_cdq(2, 1), PolyMatrix([[ONE, D**3], [ZERO, ONE]]))
    assert R.validated and check_axioms_lambda(R).valid


def _corrupt(R: LCA2, which: int, delta: MPoly) -> LCA2:
    q = [[list(R.q[i][j]) for j in range(2)] for i in range(2)]
    i, j, k = which // 4, (which // 2) % 2, which % 2
    q[i][j][k] = q[i][j][k] + delta
    return LCA2(tuple(tuple(BracketValue(*q[a][b]) for b in range(2)) for a in range(2)))


@given(st.sampled_from(FAMILY), st.integers(0, 7), st.sampled_from([ONE, LAM, D, V, LAM * D, V * D]))
@settings(max_examples=40, deadline=None)
def test_checkers_agree_with_oracle_on_corruptions(R, which, delta):
    bad = _corrupt(R, which, delta)
    lam_ok = check_axioms_lambda(bad).valid
    assert lam_ok == check_axioms_nth(bad).valid
    assert lam_ok == (not lambda_axiom_residuals(bad))


def test_json_roundtrip(tmp_path):
    R = r_cdq(-4, 0, V * U**3)
    path = tmp_path / "a.json"
    path.write_text(json.dumps(algebra_to_json(R)))
    back = algebra_from_json(read_json(str(path)))
    assert LCA2(back.q, validated=True) == R


def test_json_errors_carry_positions(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"rank": 2,\n  "brackets": ')
    with pytest.raises(AlgebraFormatError) as info:
        read_json(str(path))
    assert ":2:" in str(info.value)
    with pytest.raises(AlgebraFormatError) as info:
        algebra_from_json({"rank": 2, "brackets": {"1,1": [[], []], "1,2": [[{"den": "1"}], []], "2,2": [[], []]}})
    assert "$.brackets.1,2[0][0]" in str(info.value)


def test_rank1_json():
    q = rank1_from_json({"rank": 1, "brackets": {"1,1": [(3 * V).to_literal()]}})
    assert q == 3 * V
