"""Skew-symmetric polynomials f(x, y) = -f(-x-y, y).

Every such f factors as (2x+y)·g(x²+xy, y). The cofactor g is stored as an
MPoly whose "x" slot stands for u = x²+xy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import MPoly, X, Y, LAM, D, ZERO, poly_sum

U_OF_XY = X * X + X * Y


def to_xy(p: MPoly) -> MPoly:
    """Rename λ → x and ∂ → y."""
    return p.rename({"lambda": "x", "partial": "y"})


def to_lambda(p: MPoly) -> MPoly:
    """Rename x → λ and y → ∂."""
    return p.rename({"x": "lambda", "y": "partial"})


def _check_xy(p: MPoly) -> None:
    extra = p.variables() - {"x", "y"}
    if extra:
        raise ValueError(f"expected a polynomial in x, y only; found {sorted(extra)}")


def is_skew(p: MPoly) -> bool:
    _check_xy(p)
    return (p + p.substitute({"x": -X - Y})).is_zero()


def is_skew_lambda(p: MPoly) -> bool:
    """Skew-symmetry for a polynomial in (λ, ∂)."""
    if p.variables() - {"lambda", "partial"}:
        raise ValueError("expected a polynomial in λ, ∂ only")
    return (p + p.substitute({"lambda": -LAM - D})).is_zero()


def divide_by_2x_plus_y(p: MPoly, xvar: str = "x", yvar: str = "y") -> MPoly:
    """Exact quotient p / (2·xvar + yvar); raises if the division is not exact."""
    if p.is_zero():
        return ZERO
    coeffs = p.coeffs_in(xvar)
    yv = MPoly.var(yvar)
    xv = MPoly.var(xvar)
    q = [ZERO] * max(len(coeffs) - 1, 0)
    for k in range(len(coeffs) - 1, 0, -1):
        above = q[k] if k < len(q) else ZERO
        q[k - 1] = (coeffs[k] - yv * above) * Fraction(1, 2)
    rem = coeffs[0] - yv * (q[0] if q else ZERO)
    if not rem.is_zero():
        raise ValueError(f"{p} is not divisible by 2{xvar}+{yvar}")
    return poly_sum(c * xv ** k for k, c in enumerate(q))


@dataclass(frozen=True)
class SkewDecomposition:
    cofactor: MPoly
    original: MPoly

    def expand(self) -> MPoly:
        return (2 * X + Y) * self.cofactor.substitute({"x": U_OF_XY})


def skew_decompose(p: MPoly) -> SkewDecomposition:
    _check_xy(p)
    try:
        h = divide_by_2x_plus_y(p)
    except ValueError:
        raise ValueError(f"{p} is not skew-symmetric") from None
    g = ZERO
    while not h.is_zero():
        a = int(h.deg_in("x"))
        if a % 2:
            raise ValueError(f"{p} is not skew-symmetric")
        c = h.coeff_in("x", a)
        i = a // 2
        g = g + c * X ** i
        h = h - c * U_OF_XY ** i
    return SkewDecomposition(g, p)


def skew_basis(n: int) -> list[MPoly]:
    if n < 1:
        raise ValueError("degree must be at least 1")
    base = 2 * X + Y
    return [base * U_OF_XY ** i * Y ** (n - 1 - 2 * i) for i in range((n - 1) // 2 + 1)]


def skew_coordinates(p: MPoly, n: int) -> list[Fraction]:
    """Coordinates of a homogeneous degree-n skew polynomial in skew_basis(n)."""
    g = skew_decompose(p).cofactor
    coords = []
    used = ZERO
    for i in range((n - 1) // 2 + 1):
        c = g.coefficient(x=i, y=n - 1 - 2 * i)
        coords.append(c)
        used = used + c * X ** i * Y ** (n - 1 - 2 * i)
    if used != g:
        raise ValueError(f"{p} is not homogeneous of degree {n}")
    return coords
