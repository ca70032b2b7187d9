"""Exact rational linear algebra, backed by sympy's dense domain matrices over QQ."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix


def _to_dm(rows: Sequence[Sequence], ncols: int) -> DomainMatrix:
    conv = [[QQ(Fraction(x).numerator, Fraction(x).denominator) for x in r] for r in rows]
    return DomainMatrix(conv, (len(conv), ncols), QQ)


def _frac(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of {v : rows·v = 0}."""
    if ncols == 0:
        return []
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    N = _to_dm(rows, ncols).nullspace()
    if N.shape[0] == 0:
        return []
    return [[_frac(x) for x in r] for r in N.to_list()]


def rank(rows: Sequence[Sequence], ncols: int) -> int:
    if not rows or ncols == 0:
        return 0
    return _to_dm(rows, ncols).rank()


def solve(rows: Sequence[Sequence], rhs: Sequence, ncols: int) -> list[Fraction] | None:
    """One solution of rows·v = rhs, or None when inconsistent."""
    if not rows:
        return [Fraction(0)] * ncols
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    R, pivots = _to_dm(aug, ncols + 1).rref()
    if ncols in pivots:
        return None
    sol = [Fraction(0)] * ncols
    Rl = R.to_list()
    for i, p in enumerate(pivots):
        sol[p] = _frac(Rl[i][ncols])
    return sol


def _monomial_rows(polys) -> tuple[list[list[Fraction]], list]:
    keys = sorted({e for p in polys for e, _ in p.terms()})
    index = {k: i for i, k in enumerate(keys)}
    rows = [[Fraction(0)] * len(polys) for _ in keys]
    for j, p in enumerate(polys):
        for e, c in p.terms():
            rows[index[e]][j] = c
    return rows, keys


def poly_relations(polys) -> list[list[Fraction]]:
    """Basis of rational vectors v with Σ v_j·polys[j] = 0."""
    rows, _ = _monomial_rows(polys)
    return nullspace(rows, len(polys))


def poly_combination(target, polys) -> list[Fraction] | None:
    """Rational coefficients expressing target in terms of polys, or None."""
    rows, keys = _monomial_rows(list(polys) + [target])
    rhs = [r[-1] for r in rows]
    return solve([r[:-1] for r in rows], rhs, len(polys))
