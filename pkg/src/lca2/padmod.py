"""Submodules of the free module C[∂]² and the ideal series of an algebra."""

from __future__ import annotations

from dataclasses import dataclass

from .poly import MPoly, PolyMatrix, ZERO, ONE, D, bezout, hermite_form, divmod_uni
from .lca_core import LCA2, Element, bracket, nth_products

MAX_SERIES = 8


@dataclass(frozen=True)
class Submodule:
    basis: tuple[Element, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, v: Element) -> bool:
        return span(list(self.basis) + [v]) == self

    def contains_module(self, other: "Submodule") -> bool:
        return span(list(self.basis) + list(other.basis)) == self

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.basis == (Element(ONE, ZERO), Element(ZERO, ONE))

    def __str__(self) -> str:
        if not self.basis:
            return "0"
        return "span{" + ", ".join(f"({a}, {b})" for a, b in self.basis) + "}"


def span(gens: list[Element]) -> Submodule:
    gens = [g for g in gens if g.x1 or g.x2]
    if not gens:
        return Submodule(())
    H, _ = hermite_form(PolyMatrix([[g.x1, g.x2] for g in gens]))
    rows = [Element(*r) for r in H.rows if any(r)]
    return Submodule(tuple(rows))


FULL = Submodule((Element(ONE, ZERO), Element(ZERO, ONE)))


def full_module() -> Submodule:
    return FULL


def derived_algebra(R: LCA2, S: Submodule | None = None, T: Submodule | None = None) -> Submodule:
    """C[∂]-span of a_(n)b over basis elements a of S, b of T; [R, R] by default."""
    S = FULL if S is None else S
    T = FULL if T is None else T
    gens = []
    for a in S.basis:
        for b in T.basis:
            gens.extend(e for _, e in nth_products(bracket(R, a, b)))
    return span(gens)


def derived_series(R: LCA2) -> list[Submodule]:
    series = [FULL]
    for _ in range(MAX_SERIES):
        nxt = derived_algebra(R, series[-1], series[-1])
        if nxt == series[-1]:
            break
        series.append(nxt)
        if nxt.is_zero():
            break
    return series


def lower_central_series(R: LCA2) -> list[Submodule]:
    series = [FULL]
    for _ in range(MAX_SERIES):
        nxt = derived_algebra(R, FULL, series[-1])
        if nxt == series[-1]:
            break
        series.append(nxt)
        if nxt.is_zero():
            break
    return series


def is_solvable(R: LCA2) -> bool:
    return derived_series(R)[-1].is_zero()


def is_nilpotent(R: LCA2) -> bool:
    return lower_central_series(R)[-1].is_zero()


def is_ideal(R: LCA2, S: Submodule) -> bool:
    return S.contains_module(derived_algebra(R, FULL, S))


def _uni_lambda_gcd_pair(rows: list[tuple[MPoly, MPoly]]) -> list[tuple[MPoly, MPoly]]:
    """Kernel of the ℚ[λ]-linear map w ↦ (n₁·w₁ + n₂·w₂)_rows, as a list of generators."""
    nz = [r for r in rows if r[0] or r[1]]
    if not nz:
        return [(ONE, ZERO), (ZERO, ONE)]
    r0 = nz[0]
    for r in nz[1:]:
        if r0[0] * r[1] - r0[1] * r[0]:
            return []
    n1, n2 = r0
    if n1.is_zero():
        return [(ONE, ZERO)]
    if n2.is_zero():
        return [(ZERO, ONE)]
    g = bezout(n1, n2, "lambda")[0]
    w1, _ = divmod_uni(n2, g, "lambda")
    w2, _ = divmod_uni(-n1, g, "lambda")
    return [(w1, w2)]


def center(R: LCA2) -> Submodule:
    """All v with [v_λ X^k] = 0 for k = 1, 2.

    Writing w_j(λ) = v_j(-λ), each power of ∂ in Σ_j w_j(λ)Q_{jk}^m(λ,∂) gives a
    ℚ[λ]-linear equation; the kernel of this two-column system is the center.
    """
    rows = []
    for k in range(2):
        for m in range(2):
            c0 = R.q[0][k][m].coeffs_in("partial")
            c1 = R.q[1][k][m].coeffs_in("partial")
            for e in range(max(len(c0), len(c1))):
                rows.append((c0[e] if e < len(c0) else ZERO, c1[e] if e < len(c1) else ZERO))
    gens = _uni_lambda_gcd_pair(rows)
    back = {"lambda": -D}
    return span([Element(w1.substitute(back), w2.substitute(back)) for w1, w2 in gens])


def primitive(v: Element) -> Element:
    """Divide out the content and make the first nonzero coordinate monic."""
    a, b = v
    if a.is_zero() and b.is_zero():
        raise ValueError("zero vector has no primitive part")
    if a.is_zero():
        g = b
    elif b.is_zero():
        g = a
    else:
        g = bezout(a, b)[0]
    a, _ = divmod_uni(a, g)
    b, _ = divmod_uni(b, g)
    lead = a if a else b
    lc = lead.uni_coeffs("partial")[-1]
    return Element(a * (1 / lc), b * (1 / lc))


def saturate(S: Submodule) -> Element:
    if S.rank != 1:
        raise ValueError(f"saturate expects a rank-one submodule, got rank {S.rank}")
    return primitive(S.basis[0])
