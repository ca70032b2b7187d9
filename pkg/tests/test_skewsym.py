
import pytest
from hypothesis import given

from lca2.poly import X, Y, LAM, D, ONE
from lca2.skewsym import (
    is_skew,
    is_skew_lambda,
    skew_decompose,
    skew_basis,
    skew_coordinates,
    divide_by_2x_plus_y,
    to_xy,
)
from lca2.linalg import rank
from helpers import polys

U = X * X + X * Y
V = 2 * X + Y


def test_is_skew_examples():
    assert is_skew(V)
    assert not is_skew(X)
    assert is_skew(V * (11 * U**4 + 2 * U**3 * Y**2))


def test_is_skew_rejects_other_variables():
    with pytest.raises(ValueError):
        is_skew(LAM + X)


def test_lambda_form():
    assert is_skew_lambda(2 * LAM + D)
    assert not is_skew_lambda(LAM)


def test_decompose_examples():
    assert skew_decompose(V).cofactor == ONE
    assert skew_decompose(V * Y).cofactor == Y
    assert skew_decompose(V * U**3).cofactor == X**3  # the u slot lives in x


def test_decompose_rejects_non_skew():
    with pytest.raises(ValueError):
        skew_decompose(X * Y)


def test_basis_examples():
    assert skew_basis(1) == [V]
    assert skew_basis(3) == [V * Y**2, V * U]
    assert len(skew_basis(7)) == 4
    assert skew_coordinates(V * U**3, 7) == [0, 0, 0, 1]


def test_basis_dimension_by_rank():
    for n in range(1, 13):
        basis = skew_basis(n)
        assert len(basis) == (n + 1) // 2
        keys = sorted({e for p in basis for e, _ in p.terms()})
        assert rank([[p.coefficient(e) for p in basis] for e in keys], len(basis)) == len(basis)
        assert all(is_skew(p) for p in basis)


def test_basis_spans_all_homogeneous_skew():
    # brute force: kernel of p ↦ p(x,y) + p(-x-y,y) on degree-n monomials
    from lca2.linalg import nullspace

    for n in range(1, 9):
        monos = [X**i * Y ** (n - i) for i in range(n + 1)]
        images = [m + m.substitute({"x": -X - Y}) for m in monos]
        keys = sorted({e for p in images for e, _ in p.terms()})
        kernel = nullspace([[p.coefficient(e) for p in images] for e in keys], len(monos))
        assert len(kernel) == len(skew_basis(n))


@given(polys(("x", "y"), max_deg=3))
def test_decompose_roundtrip(g):
    p = V * g.substitute({"x": U})
    assert is_skew(p)
    dec = skew_decompose(p)
    assert dec.expand() == p
    assert dec.cofactor == g


@given(polys(("x", "y"), max_deg=3))
def test_top_y_coefficient_degree(g):
    p = V * g.substitute({"x": U})
    if p.is_zero():
        return
    n = int(p.deg_in("y"))
    assert p.coeff_in("y", n).deg_in("x") <= n - 1


@given(polys(("x", "y"), max_deg=4))
def test_division_by_virasoro_factor(q):
    assert divide_by_2x_plus_y(V * q) == q


def test_division_not_exact_raises():
    with pytest.raises(ValueError):
        divide_by_2x_plus_y(X)


def test_coordinates_of_table_row_c_minus_6():
    row = to_xy((2 * LAM + D) * (11 * (LAM**2 + LAM * D) ** 4 + 2 * (LAM**2 + LAM * D) ** 3 * D**2))
    assert skew_coordinates(row, 9) == [0, 0, 0, 2, 11]
