"""Exact computations with rank-two Lie conformal algebras.

Polynomials have rational coefficients and are exact throughout. The main
entry points are `classify` (canonical form plus the basis change reaching
it), `are_isomorphic` and `automorphism_group`.
"""

from .poly import MPoly, PolyMatrix, LAM, MU, D, X, Y, ZERO, ONE, bezout, gcd_uni, hermite_form
from .skewsym import is_skew, is_skew_lambda, skew_basis, skew_coordinates, skew_decompose, divide_by_2x_plus_y
from .lca_core import (
    LCA2,
    Element,
    BracketValue,
    ValidationReport,
    AlgebraFormatError,
    TABLE_ROWS,
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
)
from .padmod import (
    Submodule,
    span,
    derived_algebra,
    derived_series,
    lower_central_series,
    is_solvable,
    is_nilpotent,
    is_ideal,
    center,
    saturate,
)
from .classify import (
    Commutative,
    SemisimpleVirVir,
    Rcs,
    Rnil,
    Rsol,
    Rcdq,
    IsoWitness,
    are_isomorphic,
    coboundary,
    solve_coboundary,
    form_from_json,
)
from .normalize import (
    BasisChange,
    CaseTag,
    Certificate,
    NotFound,
    PreNormalForm,
    InternalInconsistencyError,
    find_abelian_vector,
    to_prenormal,
    reduce_case1,
    reduce_case2,
    reduce_case3a,
    reduce_case3b,
    classify,
    scramble,
)
from .aut import (
    AutElement,
    AutGroupDescriptor,
    automorphism_group,
    coboundary_kernel,
    is_automorphism,
    compose,
    inverse,
    bounded_aut_search,
)

__version__ = "0.1.0"
