"""Automorphism groups of the canonical forms and a bounded brute-force search."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .poly import MPoly, PolyMatrix, D, ZERO, ONE
from .lca_core import LCA2, transform
from .linalg import nullspace, poly_combination
from .classify import CanonicalForm, Commutative, SemisimpleVirVir, Rcs, Rnil, Rsol, Rcdq, coboundary


@dataclass(frozen=True)
class AutElement:
    """φ(A) = k1·A, φ(B) = k2·B + f(∂)·A."""

    k1: Fraction
    k2: Fraction
    f: MPoly = ZERO

    def __post_init__(self):
        object.__setattr__(self, "k1", Fraction(self.k1))
        object.__setattr__(self, "k2", Fraction(self.k2))
        if self.k1 == 0 or self.k2 == 0:
            raise ValueError("k1 and k2 must be nonzero")
        if not self.f.is_univariate("partial"):
            raise ValueError("f must be a polynomial in ∂")

    @classmethod
    def identity(cls) -> "AutElement":
        return cls(1, 1, ZERO)

    @classmethod
    def from_matrix(cls, M: PolyMatrix) -> "AutElement | None":
        """The triangular parametrization of M, or None if M is not of that shape."""
        if M[1, 0] or not M[0, 0].is_constant() or not M[1, 1].is_constant():
            return None
        k1, k2 = M[0, 0].constant_term(), M[1, 1].constant_term()
        if not k1 or not k2:
            return None
        return cls(k1, k2, M[0, 1])

    def matrix(self) -> PolyMatrix:
        return PolyMatrix([[MPoly.const(self.k1), self.f], [ZERO, MPoly.const(self.k2)]])

    def to_json(self) -> dict:
        return {"k1": str(self.k1), "k2": str(self.k2), "f": self.f.to_literal()}


def compose(phi: AutElement, psi: AutElement) -> AutElement:
    """φ∘ψ."""
    return AutElement(phi.k1 * psi.k1, phi.k2 * psi.k2, psi.f * phi.k1 + phi.f * psi.k2)


def inverse(phi: AutElement) -> AutElement:
    return AutElement(1 / phi.k1, 1 / phi.k2, phi.f * (-1 / (phi.k1 * phi.k2)))


def _as_matrix(phi) -> PolyMatrix:
    return phi.matrix() if isinstance(phi, AutElement) else phi


def is_automorphism(R: LCA2, phi) -> bool:
    """φ preserves every generator bracket and is invertible over the polynomial ring."""
    M = _as_matrix(phi)
    det = M.det()
    if det.is_zero() or not det.is_constant():
        return False
    return transform(R, M) == R


# coboundary kernel


def coboundary_kernel(c, d) -> list[MPoly]:
    """Basis of {f(∂) : S_f^{c,d} = 0}, f of degree ≤ 4 (higher degrees never occur)."""
    images = [coboundary(c, d, D ** k) for k in range(5)]
    keys = sorted({e for p in images for e, _ in p.terms()})
    rows = [[p.coefficient(e) for p in images] for e in keys]
    basis = nullspace(rows, 5)
    out = [MPoly.from_univariate(v) for v in basis]
    return sorted((_normalize_basis(p) for p in out), key=lambda p: p.deg_in("partial"))


def _normalize_basis(p: MPoly) -> MPoly:
    return p * (1 / p.uni_coeffs()[0]) if p.constant_term() else p * (1 / p.leading_coefficient())


def coboundary_kernel_formula(c, d) -> list[MPoly]:
    """The same kernel from the closed form, for cross-checking."""
    c, d = Fraction(c), Fraction(d)
    if d != 0:
        return [ONE + (1 - c) / d * D]
    out = [D]
    if c == 1:
        out.insert(0, ONE)
    if c == 0:
        out.append(D ** 2)
    if c == -1:
        out.append(D ** 3)
    return out


# descriptors


_SWAP = PolyMatrix([[ZERO, ONE], [ONE, ZERO]])


@dataclass(frozen=True)
class AutGroupDescriptor:
    group: str
    constraints: tuple[str, ...]
    generators: tuple = ()
    dim: int | None = None
    f_basis: tuple[MPoly, ...] | None = None
    k1_fixed: bool = False
    k1_is_k2_squared: bool = False
    k2_fixed: bool = False
    notes: dict = field(default_factory=dict, compare=False)

    def satisfies(self, phi) -> bool:
        """Whether φ obeys the descriptor's constraint equations."""
        M = _as_matrix(phi)
        if self.group == "GL2PolyRing":
            det = M.det()
            return bool(det) and det.is_constant()
        if self.group == "Z2":
            return M == PolyMatrix.identity(2) or M == _SWAP
        el = phi if isinstance(phi, AutElement) else AutElement.from_matrix(M)
        if el is None:
            return False
        if self.k2_fixed and el.k2 != 1:
            return False
        if self.k1_fixed and el.k1 != 1:
            return False
        if self.k1_is_k2_squared and el.k1 != el.k2 ** 2:
            return False
        if self.f_basis is not None:
            if not self.f_basis:
                return el.f.is_zero()
            return el.f.is_zero() or poly_combination(el.f, list(self.f_basis)) is not None
        return True

    def to_json(self) -> dict:
        gens = [g.to_json() if isinstance(g, AutElement) else {"matrix": g.to_literal()} for g in self.generators]
        out = {"group": self.group, "constraints": list(self.constraints), "generators": gens}
        if self.dim is not None:
            out["dim"] = self.dim
        return out


def automorphism_group(F: CanonicalForm) -> AutGroupDescriptor:
    if isinstance(F, Commutative):
        E = PolyMatrix([[ONE, D], [ZERO, ONE]])
        return AutGroupDescriptor(
            "GL2PolyRing",
            ("det M is a nonzero constant",),
            (_SWAP, PolyMatrix([[MPoly.const(2), ZERO], [ZERO, ONE]]), E, E.transpose()),
        )
    if isinstance(F, SemisimpleVirVir):
        return AutGroupDescriptor("Z2", ("M in {I, swap}",), (PolyMatrix.identity(2), _SWAP))
    if isinstance(F, Rcs):
        return AutGroupDescriptor(
            "Cstar", ("k2=1", "f=0"), (AutElement(2, 1), AutElement(-1, 1)), f_basis=(), k2_fixed=True
        )
    if isinstance(F, Rnil):
        gens = (AutElement(4, 2), AutElement(1, -1)) + tuple(AutElement(1, 1, D ** i) for i in range(4))
        return AutGroupDescriptor(
            "CstarSemidirectPolyRing", ("k1=k2^2",), gens, k1_is_k2_squared=True, notes={"f": "unconstrained"}
        )
    if isinstance(F, Rsol):
        fa = F.a.substitute({"lambda": -D})
        return AutGroupDescriptor(
            "CstarSemidirectC",
            ("k2=1", "f=k*a(-partial)"),
            (AutElement(2, 1), AutElement(1, 1, fa)),
            f_basis=(fa,),
            k2_fixed=True,
        )
    if isinstance(F, Rcdq):
        kernel = tuple(coboundary_kernel(F.c, F.d))
        has_q = not F.Qc.is_zero()
        dim = len(kernel)
        cons = ["k2=1", "f in span{" + ", ".join(str(p) for p in kernel) + "}"]
        if has_q:
            cons.insert(0, "k1=1")
            group = "Cvector"
            gens = tuple(AutElement(1, 1, p) for p in kernel)
        else:
            group = "CstarSemidirectC" if dim == 1 else "CstarSemidirectCvector"
            gens = (AutElement(2, 1),) + tuple(AutElement(1, 1, p) for p in kernel)
        return AutGroupDescriptor(
            group,
            tuple(cons),
            gens,
            dim=dim if group != "CstarSemidirectC" else None,
            f_basis=kernel,
            k1_fixed=has_q,
            k2_fixed=True,
        )
    raise TypeError(f"not a canonical form: {F!r}")


# bounded search

_PRIME = 32749
_POINTS = ((3, 5), (7, 11), (13, 2), (17, 29))


def _coeff_vectors(deg_bound: int, coeff_set) -> np.ndarray:
    return np.array(list(itertools.product(coeff_set, repeat=deg_bound + 1)), dtype=np.int64)


def _powers(x: int, n: int) -> np.ndarray:
    return np.array([pow(x, k, _PRIME) for k in range(n)], dtype=np.int64)


def _poly_mat(c: np.ndarray) -> MPoly:
    return MPoly.from_univariate([Fraction(int(x)) for x in c])


def bounded_aut_search(R: LCA2, deg_bound: int = 2, coeff_set=range(-2, 3), max_pairs: int = 200_000) -> list[PolyMatrix]:
    """All automorphisms whose matrix entries have degree ≤ deg_bound and coefficients in coeff_set.

    Candidates are screened by evaluating the bracket conditions modulo a prime at a
    few points, one column at a time where the structure allows it; every survivor
    is confirmed with exact arithmetic.
    """
    coeff_set = list(coeff_set)
    n = deg_bound + 1
    entries = _coeff_vectors(deg_bound, coeff_set)
    ne = len(entries)
    # every column (u1, u2) as an index pair into entries
    col_idx = np.array(list(itertools.product(range(ne), repeat=2)), dtype=np.int64)
    q = [[[R.q[i][j][k] for k in range(2)] for j in range(2)] for i in range(2)]

    evals = []
    for lam, dd in _POINTS:
        at = {"lambda": lam, "partial": dd}
        Qv = [[[q[i][j][k].eval_mod(at, _PRIME) for k in range(2)] for j in range(2)] for i in range(2)]
        e_neg = entries @ _powers(-lam % _PRIME, n) % _PRIME
        e_pls = entries @ _powers((lam + dd) % _PRIME, n) % _PRIME
        e_d = entries @ _powers(dd, n) % _PRIME
        evals.append((Qv, e_neg, e_pls, e_d))

    def col_vals(cols, table):
        return table[cols[:, 0]], table[cols[:, 1]]

    def bracket_mod(Qv, un, vp, k):
        acc = 0
        for a in range(2):
            for b in range(2):
                if Qv[a][b][k]:
                    acc = (acc + un[a] * vp[b] % _PRIME * Qv[a][b][k]) % _PRIME
        return acc

    def column_filter(i: int) -> np.ndarray:
        cols = col_idx
        if q[i][i][1 - i]:
            return cols
        keep = np.ones(len(cols), dtype=bool)
        for Qv, e_neg, e_pls, e_d in evals:
            un = col_vals(cols, e_neg)
            vp = col_vals(cols, e_pls)
            ud = col_vals(cols, e_d)
            for k in range(2):
                lhs = bracket_mod(Qv, un, vp, k)
                rhs = Qv[i][i][i] * ud[k] % _PRIME
                keep &= (lhs - rhs) % _PRIME == 0
        return cols[keep]

    C1 = column_filter(0)
    C2 = column_filter(1)
    found = []
    step = max(1, max_pairs // max(1, len(C2)))
    for start in range(0, len(C1), step):
        A = C1[start : start + step]
        ia = np.repeat(np.arange(len(A)), len(C2))
        ib = np.tile(np.arange(len(C2)), len(A))
        keep = np.ones(len(ia), dtype=bool)
        # determinant must be a nonzero constant: equal nonzero values at several ∂
        dets = []
        for _, _, _, e_d in evals:
            u = col_vals(A, e_d)
            v = col_vals(C2, e_d)
            dets.append((u[0][ia] * v[1][ib] - u[1][ia] * v[0][ib]) % _PRIME)
        keep &= dets[0] != 0
        for dv in dets[1:]:
            keep &= dv == dets[0]
        for Qv, e_neg, e_pls, e_d in evals:
            if not keep.any():
                break
            cols = (A, C2)
            idx = (ia, ib)
            neg = [tuple(x[idx[c]] for x in col_vals(cols[c], e_neg)) for c in range(2)]
            pls = [tuple(x[idx[c]] for x in col_vals(cols[c], e_pls)) for c in range(2)]
            dvals = [tuple(x[idx[c]] for x in col_vals(cols[c], e_d)) for c in range(2)]
            for i, j in ((0, 0), (0, 1), (1, 1)):
                for k in range(2):
                    lhs = bracket_mod(Qv, neg[i], pls[j], k)
                    rhs = 0
                    for m in range(2):
                        if Qv[i][j][m]:
                            rhs = (rhs + Qv[i][j][m] * dvals[m][k]) % _PRIME
                    keep &= (lhs - rhs) % _PRIME == 0
        for t in np.nonzero(keep)[0]:
            u, v = A[ia[t]], C2[ib[t]]
            M = PolyMatrix(
                [
                    [_poly_mat(entries[u[0]]), _poly_mat(entries[v[0]])],
                    [_poly_mat(entries[u[1]]), _poly_mat(entries[v[1]])],
                ]
            )
            if is_automorphism(R, M):
                found.append(M)
    return sorted(found, key=lambda M: repr(M.to_literal()))
