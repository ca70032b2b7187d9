from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from lca2.poly import PolyMatrix, LAM, D, ZERO, ONE
from lca2.lca_core import TABLE_ROWS, commutative2, r_ss, r_cs, r_nil, r_sol, r_cdq
from lca2.classify import Commutative, SemisimpleVirVir, Rcs, Rnil, Rsol, Rcdq
from lca2.aut import (
    AutElement,
    automorphism_group,
    bounded_aut_search,
    coboundary_kernel,
    coboundary_kernel_formula,
    compose,
    inverse,
    is_automorphism,
)
from helpers import uni_polys

V = 2 * LAM + D
U = LAM**2 + LAM * D
Q7 = V * U**3

FORMS = [
    Commutative(),
    SemisimpleVirVir(),
    Rcs(),
    Rnil(V * D**2),
    Rsol(LAM**2 + 1),
    Rcdq(2, 1),
    Rcdq(-4, 0, Q7),
    Rcdq(5, 0),
    Rcdq(0, 0),
    Rcdq(0, 0, TABLE_ROWS[0][1]),
    Rcdq(1, 0, V),
    Rcdq(-1, 0),
]


def test_descriptor_examples():
    G = automorphism_group(Rnil(V))
    assert G.group == "CstarSemidirectPolyRing" and G.constraints == ("k1=k2^2",)
    G = automorphism_group(Rcdq(-4, 0, Q7))
    assert G.group == "Cvector" and G.dim == 1 and G.f_basis == (D,) and G.k1_fixed
    G = automorphism_group(Rcdq(0, 0))
    assert G.group == "CstarSemidirectCvector" and G.dim == 2 and G.f_basis == (D, D**2) and not G.k1_fixed
    assert automorphism_group(SemisimpleVirVir()).group == "Z2"
    assert automorphism_group(Rcs()).group == "Cstar"
    assert automorphism_group(Commutative()).group == "GL2PolyRing"


@pytest.mark.parametrize("F", FORMS, ids=lambda F: str(F.to_json())[:50])
def test_generators_are_automorphisms(F):
    G = automorphism_group(F)
    R = F.algebra()
    for g in G.generators:
        assert is_automorphism(R, g)
        assert G.satisfies(g)


def test_is_automorphism_examples():
    assert is_automorphism(r_nil(V), AutElement(1, 1))
    assert is_automorphism(r_nil(V), AutElement(4, 2, D**5))
    assert not is_automorphism(r_nil(V), AutElement(4, 3))
    assert is_automorphism(r_sol(LAM), AutElement(2, 1, -3 * D))
    assert not is_automorphism(r_sol(LAM), AutElement(2, 1, 3 * ONE))
    assert not is_automorphism(r_cs(), PolyMatrix([[D, ZERO], [ZERO, ONE]]))


def test_aut_element_rejects_zero_scalars():
    with pytest.raises(ValueError):
        AutElement(0, 1)


elements = st.builds(
    AutElement,
    st.fractions(-3, 3, max_denominator=3).filter(bool),
    st.fractions(-3, 3, max_denominator=3).filter(bool),
    uni_polys(3),
)


@given(elements, elements, elements)
def test_group_laws_match_matrices(a, b, c):
    assert compose(a, b).matrix() == a.matrix() @ b.matrix()
    assert compose(compose(a, b), c) == compose(a, compose(b, c))
    assert compose(a, inverse(a)) == AutElement.identity()
    assert compose(inverse(a), a) == AutElement.identity()


@pytest.mark.parametrize("F", FORMS[2:], ids=lambda F: str(F.to_json())[:50])
@settings(max_examples=15, deadline=None)
@given(data=st.data())
def test_products_of_generators_stay_in_the_group(F, data):
    G = automorphism_group(F)
    gens = [g for g in G.generators if isinstance(g, AutElement)]
    word = data.draw(st.lists(st.sampled_from(gens + [inverse(g) for g in gens]), min_size=1, max_size=4))
    acc = AutElement.identity()
    for g in word:
        acc = compose(acc, g)
    assert G.satisfies(acc)
    assert is_automorphism(F.algebra(), acc)


def _kernel_by_sympy(c, d):
    l, x = sp.symbols("l x")
    a = sp.symbols("a0:6")
    f = lambda t: sum(a[i] * t**i for i in range(6))
    expr = sp.expand(f(l + x) * (c * l + d + x) + f(-l) * (c * l + c * x - d - x) - (2 * l + x) * f(x))
    eqs = sp.Poly(expr, l, x).coeffs()
    sol = sp.linsolve(eqs, a)
    (vec,) = sol
    free = sorted(set().union(*[sp.sympify(v).free_symbols for v in vec]), key=str)
    return len(free)


@pytest.mark.parametrize(
    "c,d",
    [(2, 1), (0, 3), (1, 1), (-1, 2), (Fraction(1, 2), -3), (7, 0), (1, 0), (0, 0), (-1, 0), (-4, 0), (-6, 0), (3, 0)],
)
def test_coboundary_kernel_closed_form_and_dimension(c, d):
    got = coboundary_kernel(c, d)
    assert got == coboundary_kernel_formula(c, d)
    assert len(got) == _kernel_by_sympy(sp.nsimplify(c), sp.nsimplify(d))


def test_kernel_examples():
    assert coboundary_kernel(2, 1) == [ONE - D]
    assert coboundary_kernel(-1, 0) == [D, D**3]
    assert coboundary_kernel(7, 0) == [D]


def test_kernel_elements_are_automorphisms():
    for c, d in [(2, 1), (0, 0), (1, 0), (-1, 0), (5, 0)]:
        R = r_cdq(c, d)
        for f in coboundary_kernel(c, d):
            assert is_automorphism(R, AutElement(1, 1, f))


def test_search_examples():
    assert bounded_aut_search(r_ss(), 0, [-1, 0, 1]) == sorted(
        [PolyMatrix.identity(2), PolyMatrix([[ZERO, ONE], [ONE, ZERO]])], key=lambda M: repr(M.to_literal())
    )
    found = bounded_aut_search(r_cs(), 0)
    assert {M[0, 0].constant_term() for M in found} == {-2, -1, 1, 2}
    assert all(M[1, 1] == ONE and M[0, 1].is_zero() and M[1, 0].is_zero() for M in found)
    found = bounded_aut_search(commutative2(), 0, [-1, 0, 1])
    assert len(found) == 48  # the invertible 2×2 matrices over {-1, 0, 1}
    assert all(M.det().constant_term() in (-2, -1, 1, 2) for M in found)


@pytest.mark.parametrize("F", [Rnil(V), Rsol(LAM), Rcdq(-1, 0, V * D**2), Rcdq(3, 0)], ids=lambda F: F.tag)
def test_search_respects_triangular_shape_and_descriptor(F):
    G = automorphism_group(F)
    found = bounded_aut_search(F.algebra(), 2, range(-1, 2))
    assert PolyMatrix.identity(2) in found
    for M in found:
        assert AutElement.from_matrix(M) is not None
        assert G.satisfies(M)
