"""Canonical forms of rank-two algebras, isomorphism decisions, coboundary solving."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .poly import MPoly, PolyMatrix, LAM, D, ZERO
from .lca_core import (
    LCA2,
    commutative2,
    r_ss,
    r_cs,
    r_nil,
    r_sol,
    r_cdq,
    table_coordinates,
    transform,
)
from .linalg import poly_combination


def _rat(x: Fraction) -> str:
    return str(Fraction(x))


@dataclass(frozen=True)
class Commutative:
    tag = "Commutative"

    def algebra(self) -> LCA2:
        return commutative2()

    def normalized(self) -> "Commutative":
        return self

    def to_json(self) -> dict:
        return {"type": self.tag}


@dataclass(frozen=True)
class SemisimpleVirVir:
    qualified: bool = False
    tag = "SemisimpleVirVir"

    def algebra(self) -> LCA2:
        return r_ss()

    def normalized(self) -> "SemisimpleVirVir":
        return self

    def to_json(self) -> dict:
        return {"type": self.tag, "qualified": self.qualified}


@dataclass(frozen=True)
class Rcs:
    tag = "Rcs"

    def algebra(self) -> LCA2:
        return r_cs()

    def normalized(self) -> "Rcs":
        return self

    def to_json(self) -> dict:
        return {"type": self.tag}


@dataclass(frozen=True)
class Rnil:
    Q: MPoly
    scale: Fraction = Fraction(1)
    tag = "Rnil"

    def __post_init__(self):
        if self.Q.is_zero():
            raise ValueError("Rnil needs Q ≠ 0; Q = 0 is the commutative algebra")

    def algebra(self) -> LCA2:
        return r_nil(self.Q)

    def normalized(self) -> "Rnil":
        lc = self.Q.leading_coefficient()
        return Rnil(self.Q * (1 / lc), self.scale * lc)

    def to_json(self) -> dict:
        return {"type": self.tag, "Q": self.Q.to_literal(), "scale": _rat(self.scale)}


@dataclass(frozen=True)
class Rsol:
    a: MPoly
    tag = "Rsol"

    def __post_init__(self):
        if self.a.is_zero():
            raise ValueError("Rsol needs a ≠ 0")

    def algebra(self) -> LCA2:
        return r_sol(self.a)

    def normalized(self) -> "Rsol":
        return Rsol(self.a * (1 / self.a.leading_coefficient()))

    def to_json(self) -> dict:
        return {"type": self.tag, "a": self.a.to_literal()}


@dataclass(frozen=True)
class Rcdq:
    c: Fraction
    d: Fraction
    Qc: MPoly = ZERO
    tag = "Rcdq"

    def __post_init__(self):
        object.__setattr__(self, "c", Fraction(self.c))
        object.__setattr__(self, "d", Fraction(self.d))
        if self.Qc and (self.d != 0 or table_coordinates(self.c, self.Qc) is None):
            raise ValueError(f"Qc = {self.Qc} violates the table constraints for c={self.c}, d={self.d}")

    def params(self) -> tuple[Fraction, Fraction]:
        return table_coordinates(self.c, self.Qc)

    def algebra(self) -> LCA2:
        return r_cdq(self.c, self.d, self.Qc)

    def normalized(self) -> "Rcdq":
        beta, gamma = self.params()
        lead = beta if beta else gamma
        if not lead:
            return self
        return Rcdq(self.c, self.d, self.Qc * (1 / lead))

    def to_json(self) -> dict:
        beta, gamma = self.params()
        return {
            "type": self.tag,
            "c": _rat(self.c),
            "d": _rat(self.d),
            "Qc": self.Qc.to_literal(),
            "params": {"beta": _rat(beta), "gamma": _rat(gamma)},
        }


CanonicalForm = Union[Commutative, SemisimpleVirVir, Rcs, Rnil, Rsol, Rcdq]


def form_from_json(obj: dict) -> CanonicalForm:
    kind = obj.get("type")
    if kind == "Commutative":
        return Commutative()
    if kind == "SemisimpleVirVir":
        return SemisimpleVirVir(bool(obj.get("qualified", False)))
    if kind == "Rcs":
        return Rcs()
    if kind == "Rnil":
        return Rnil(MPoly.from_literal(obj["Q"]), Fraction(obj.get("scale", "1")))
    if kind == "Rsol":
        return Rsol(MPoly.from_literal(obj["a"]))
    if kind == "Rcdq":
        return Rcdq(Fraction(obj["c"]), Fraction(obj["d"]), MPoly.from_literal(obj.get("Qc", [])))
    raise ValueError(f"unknown canonical form type {kind!r}")


# isomorphisms


@dataclass(frozen=True)
class IsoWitness:
    """φ(A) = s·A', φ(B) = t·B' + p(∂)·A' from the first algebra to the second."""

    s: Fraction = Fraction(1)
    t: Fraction = Fraction(1)
    p: MPoly = ZERO

    def matrix(self) -> PolyMatrix:
        return PolyMatrix([[MPoly.const(self.s), self.p], [ZERO, MPoly.const(self.t)]])

    def verify(self, F1: CanonicalForm, F2: CanonicalForm) -> bool:
        return transform(F2.algebra(), self.matrix()) == F1.algebra()

    def to_json(self) -> dict:
        return {"s": _rat(self.s), "t": _rat(self.t), "p": self.p.to_literal(), "matrix": self.matrix().to_literal()}


def associate_ratio(f: MPoly, g: MPoly) -> Fraction | None:
    """k with f = k·g, k ≠ 0, or None."""
    if f.is_zero() or g.is_zero():
        return Fraction(1) if f.is_zero() and g.is_zero() else None
    k = f.leading_coefficient() / g.leading_coefficient()
    return k if f == g * k else None


def are_isomorphic(F1: CanonicalForm, F2: CanonicalForm) -> tuple[bool, IsoWitness | None]:
    if type(F1) is not type(F2):
        return False, None
    if isinstance(F1, (Commutative, Rcs, SemisimpleVirVir)):
        return True, IsoWitness()
    if isinstance(F1, Rsol):
        k = associate_ratio(F1.a, F2.a)
        return (False, None) if k is None else (True, IsoWitness(t=k))
    if isinstance(F1, Rnil):
        k = associate_ratio(F1.Q, F2.Q)
        return (False, None) if k is None else (True, IsoWitness(s=1 / k))
    if isinstance(F1, Rcdq):
        if F1.c != F2.c or F1.d != F2.d:
            return False, None
        k = associate_ratio(F1.Qc, F2.Qc)
        return (False, None) if k is None else (True, IsoWitness(s=1 / k))
    raise TypeError(f"not a canonical form: {F1!r}")


# coboundaries


def coboundary(c, d, f: MPoly) -> MPoly:
    """S_f = f(λ+∂)(cλ+d+∂) + f(-λ)(cλ+c∂-d-∂) - (2λ+∂)f(∂)."""
    c, d = Fraction(c), Fraction(d)
    return (
        f.substitute({"partial": LAM + D}) * (c * LAM + d + D)
        + f.substitute({"partial": -LAM}) * (c * LAM + c * D - d - D)
        - (2 * LAM + D) * f
    )


def solve_coboundary(c, d, P: MPoly) -> MPoly | None:
    """Some f(∂) with S_f = P, or None.

    S maps ∂^k to a polynomial of total degree at most k+1, and only f of degree
    ≤ 3 can cancel at the top, so degrees up to max(deg P, 4) suffice.
    """
    if P.is_zero():
        return ZERO
    top = max(int(P.total_degree()), 4)
    images = [coboundary(c, d, D ** k) for k in range(top + 1)]
    coords = poly_combination(P, images)
    if coords is None:
        return None
    return MPoly.from_univariate(coords)
