"""Reduce a rank-two algebra to canonical form with an explicit change of basis.

The route: locate a primitive A spanning an abelian ideal, complete it to a
basis {A, B}, normalize [B_λ A] = (a(λ)+b(λ)∂)A and the B-part of [B_λ B] to
α(2λ+∂), then remove as much of the A-part Q of [B_λ B] as basis changes
B ↦ B + p(∂)A allow.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import isqrt

from .poly import MPoly, PolyMatrix, LAM, D, X, ZERO, ONE, bezout, gcd_uni, divmod_uni, poly_sum
from .skewsym import divide_by_2x_plus_y, skew_coordinates, to_xy
from .lca_core import LCA2, Element, GEN, bracket, table_coordinates, transform, validate
from .padmod import center, derived_algebra, primitive, saturate
from .linalg import poly_combination, poly_relations
from .classify import CanonicalForm, Commutative, SemisimpleVirVir, Rcs, Rnil, Rsol, Rcdq

_V = 2 * LAM + D


class InternalInconsistencyError(RuntimeError):
    """A residue that must vanish on valid input did not."""


def _expect(cond: bool, what: str) -> None:
    if not cond:
        raise InternalInconsistencyError(what)


@dataclass(frozen=True)
class BasisChange:
    m: PolyMatrix

    def __post_init__(self):
        det = self.m.det()
        if det.is_zero() or not det.is_constant():
            raise ValueError("basis change must have a nonzero constant determinant")

    @property
    def det(self) -> Fraction:
        return self.m.det().constant_term()

    @classmethod
    def identity(cls) -> "BasisChange":
        return cls(PolyMatrix.identity(2))

    def then(self, other: "BasisChange") -> "BasisChange":
        """Apply self first, then other (in the new coordinates)."""
        return BasisChange(self.m @ other.m)

    def inverse(self) -> "BasisChange":
        return BasisChange(self.m.inverse())

    def apply(self, R: LCA2) -> LCA2:
        return transform(R, self.m)

    def to_json(self):
        return self.m.to_literal()


class CaseTag(Enum):
    CASE1 = "Case1"
    CASE2 = "Case2"
    CASE3A = "Case3a"
    CASE3B = "Case3b"


@dataclass
class Step:
    rule: str
    matrix: PolyMatrix
    residual_degree: int | None

    def to_json(self) -> dict:
        return {"rule": self.rule, "matrix": self.matrix.to_literal(), "residual_degree": self.residual_degree}


@dataclass
class Certificate:
    case: CaseTag | None = None
    steps: list[Step] = field(default_factory=list)
    lemmas: list[str] = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "case": self.case.value if self.case else None,
            "steps": [s.to_json() for s in self.steps],
            "lemmas": list(self.lemmas),
            "notes": dict(self.notes),
        }


@dataclass(frozen=True)
class NotFound:
    reason: str
    semisimple: bool = False


# locating the abelian ideal


def is_abelian_ideal_generator(R: LCA2, A: Element) -> bool:
    """[A_λ A] = 0 and [X^i_λ A] ∈ C[λ,∂]·A for both generators."""
    if not bracket(R, A, A).is_zero():
        return False
    for g in GEN:
        v = bracket(R, g, A)
        if v.x1 * A.x2 - v.x2 * A.x1:
            return False
    return True


def _ad_matrices(R: LCA2):
    """M_j[m][k] = Q_{jk}^m, so [u_λ X^k] = Σ_j u_j(-λ)·M_j[m][k]·X^m."""
    return [[[R.q[j][k][m] for k in range(2)] for m in range(2)] for j in range(2)]


def _det2(M) -> MPoly:
    return M[0][0] * M[1][1] - M[0][1] * M[1][0]


def ad_determinant_form(R: LCA2) -> tuple[MPoly, MPoly, MPoly]:
    """(D11, D12, D22) with det ad_u = s²D11 + st·D12 + t²D22, s = u1(-λ), t = u2(-λ)."""
    M1, M2 = _ad_matrices(R)
    d11 = _det2(M1)
    d22 = _det2(M2)
    S = [[M1[m][k] + M2[m][k] for k in range(2)] for m in range(2)]
    return d11, _det2(S) - d11 - d22, d22


def _from_determinant(R: LCA2, d11: MPoly, d12: MPoly) -> Element | None:
    # det ad_u = (γ1 s + γ2 t)²·E with γ polynomials in λ, so (D11 : D12/2) = (γ1 : γ2)
    if d11.is_zero():
        g1, g2 = ZERO, ONE
    else:
        for p0 in (1, 2, 3, 5, 7):
            a = d11.substitute({"partial": p0})
            b = (d12 * Fraction(1, 2)).substitute({"partial": p0})
            if a.is_zero():
                continue
            g = gcd_uni(a, b, "lambda") if b else a
            g1, _ = divmod_uni(a, g, "lambda")
            g2, _ = divmod_uni(b, g, "lambda") if b else (ZERO, None)
            break
        else:
            return None
    back = {"lambda": -D}
    cand = Element(g2.substitute(back), -g1.substitute(back))
    if cand.x1.is_zero() and cand.x2.is_zero():
        return None
    A = primitive(cand)
    return A if is_abelian_ideal_generator(R, A) else None


def _structural(R: LCA2) -> Element | NotFound | None:
    Z = center(R)
    if Z.rank == 1:
        A = saturate(Z)
        if is_abelian_ideal_generator(R, A):
            return A
    Rp = derived_algebra(R)
    if Rp.rank == 1:
        A = saturate(Rp)
        if is_abelian_ideal_generator(R, A):
            return A
    d11, d12, d22 = ad_determinant_form(R)
    if d11.is_zero() and d12.is_zero() and d22.is_zero():
        return None
    disc = d12 * d12 - 4 * d11 * d22
    if disc:
        return NotFound("the ad-determinant form has nonzero discriminant", semisimple=True)
    return _from_determinant(R, d11, d12)


def _rational_roots(coeffs: list[Fraction]) -> list[Fraction]:
    """Rational roots of a polynomial of degree ≤ 2 (dense, lowest first)."""
    while coeffs and not coeffs[-1]:
        coeffs = coeffs[:-1]
    if len(coeffs) <= 1:
        return []
    if len(coeffs) == 2:
        return [-coeffs[0] / coeffs[1]]
    c, b, a = coeffs[:3]
    disc = b * b - 4 * a * c
    if disc < 0:
        return []
    n, m = disc.numerator, disc.denominator
    rn, rm = isqrt(n), isqrt(m)
    if rn * rn != n or rm * rm != m:
        return []
    r = Fraction(rn, rm)
    return sorted({(-b + r) / (2 * a), (-b - r) / (2 * a)})


def _rank_one_factor(z: list[Fraction], n: int) -> list[Fraction] | None:
    idx = [(a, b) for a in range(n) for b in range(a, n)]
    Z = [[Fraction(0)] * n for _ in range(n)]
    for (a, b), v in zip(idx, z):
        Z[a][b] = Z[b][a] = v
    piv = next((i for i in range(n) if Z[i][i]), None)
    if piv is None:
        return None
    x = Z[piv]
    s = Z[piv][piv]
    if all(Z[a][b] * s == x[a] * x[b] for a in range(n) for b in range(n)):
        return x
    return None


def _pencil_candidates(z1: list[Fraction], z2: list[Fraction], n: int) -> list[list[Fraction]]:
    idx = [(a, b) for a in range(n) for b in range(a, n)]

    def sym(z):
        Z = [[Fraction(0)] * n for _ in range(n)]
        for (a, b), v in zip(idx, z):
            Z[a][b] = Z[b][a] = v
        return Z

    Z1, Z2 = sym(z1), sym(z2)
    # 2×2 minors of Z1 + t·Z2 are quadratics in t; a rank-one member is a common root
    g = None
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(n):
                for d in range(c + 1, n):
                    p = [
                        Z1[a][c] * Z1[b][d] - Z1[a][d] * Z1[b][c],
                        Z1[a][c] * Z2[b][d] + Z2[a][c] * Z1[b][d] - Z1[a][d] * Z2[b][c] - Z2[a][d] * Z1[b][c],
                        Z2[a][c] * Z2[b][d] - Z2[a][d] * Z2[b][c],
                    ]
                    if any(p):
                        poly = MPoly.from_univariate(p, "y")
                        g = poly if g is None else gcd_uni(g, poly, "y")
    out = []
    if g is not None:
        for t in _rational_roots(g.uni_coeffs("y")):
            x = _rank_one_factor([u + t * v for u, v in zip(z1, z2)], n)
            if x is not None:
                out.append(x)
    x = _rank_one_factor(z2, n)
    if x is not None:
        out.append(x)
    return out


def _linearization(R: LCA2, degree_bound: int) -> Element | NotFound:
    for d in range(degree_bound + 1):
        basis = [Element(D ** k, ZERO) for k in range(d + 1)] + [Element(ZERO, D ** k) for k in range(d + 1)]
        n = len(basis)
        br = [[bracket(R, basis[a], basis[b]) for b in range(n)] for a in range(n)]
        images = []
        for a in range(n):
            for b in range(a, n):
                if a == b:
                    v = br[a][a]
                    images.append(v.x1 + X * v.x2)
                else:
                    u, w = br[a][b], br[b][a]
                    images.append(u.x1 + w.x1 + X * (u.x2 + w.x2))
        kernel = poly_relations(images)
        if not kernel:
            continue
        if len(kernel) >= 3:
            return NotFound(f"polar kernel of dimension {len(kernel)} at coordinate degree {d}")
        if len(kernel) == 1:
            cands = [x for x in [_rank_one_factor(kernel[0], n)] if x is not None]
        else:
            cands = _pencil_candidates(kernel[0], kernel[1], n)
        for x in cands:
            v = Element(
                poly_sum(basis[a].x1 * x[a] for a in range(n)), poly_sum(basis[a].x2 * x[a] for a in range(n))
            )
            if v.x1.is_zero() and v.x2.is_zero():
                continue
            A = primitive(v)
            if is_abelian_ideal_generator(R, A):
                return A
    return NotFound(f"no abelian ideal generator with coordinate degree ≤ {degree_bound}")


def default_degree_bound(R: LCA2) -> int:
    return R.total_degree() + 2


def find_abelian_vector(R: LCA2, degree_bound: int | None = None, method: str = "auto") -> Element | NotFound:
    """Primitive A with [A_λ A] = 0 spanning an ideal, or NotFound.

    "structural" uses the center, the derived algebra and the ad-determinant
    form; "linearization" searches coordinate degrees up to the bound through
    the polar pairing; "auto" tries the first and falls back to the second.
    """
    if R.is_commutative():
        raise ValueError("commutative algebra: every vector spans an abelian ideal")
    if degree_bound is None:
        degree_bound = default_degree_bound(R)
    if method in ("auto", "structural"):
        found = _structural(R)
        if isinstance(found, (Element, NotFound)) or method == "structural":
            return found if found is not None else NotFound("structural invariants inconclusive")
    if method in ("auto", "linearization"):
        return _linearization(R, degree_bound)
    raise ValueError(f"unknown method {method!r}")


# pre-normal form and the reductions


@dataclass(frozen=True)
class PreNormalForm:
    a: MPoly
    b: MPoly
    alpha: Fraction
    Q: MPoly
    basis_change: BasisChange
    steps: tuple[Step, ...] = ()

    @property
    def case(self) -> CaseTag:
        if self.alpha == 0:
            return CaseTag.CASE1
        if self.b.is_zero():
            return CaseTag.CASE2
        return CaseTag.CASE3A if self.a.constant_term() else CaseTag.CASE3B

    @property
    def c(self) -> Fraction:
        return self.a.coefficient((1,))

    @property
    def d(self) -> Fraction:
        return self.a.constant_term()


class _Frame:
    """Mutable working state (a, b, α, Q) with the accumulated basis change."""

    def __init__(self, p: PreNormalForm):
        self.a, self.b, self.alpha, self.Q = p.a, p.b, p.alpha, p.Q
        self.T = p.basis_change.m
        self.steps = list(p.steps)

    def _record(self, rule: str, M: PolyMatrix) -> None:
        self.T = self.T @ M
        deg = None if self.Q.is_zero() else int(self.Q.total_degree())
        self.steps.append(Step(rule, M, deg))

    def shift_B(self, p: MPoly, rule: str) -> None:
        """B ↦ B + p(∂)A."""
        if p.is_zero():
            return
        self.Q = self.Q + self.delta(p)
        self._record(rule, PolyMatrix([[ONE, p], [ZERO, ONE]]))

    def delta(self, p: MPoly) -> MPoly:
        """Change of Q under B ↦ B + p(∂)A."""
        a_neg = self.a.substitute({"lambda": -LAM - D})
        b_neg = self.b.substitute({"lambda": -LAM - D})
        return (
            p.substitute({"partial": LAM + D}) * (self.a + self.b * D)
            - p.substitute({"partial": -LAM}) * (a_neg + b_neg * D)
            - _V * p * self.alpha
        )

    def scale_A(self, k: Fraction, rule: str) -> None:
        """A ↦ k·A."""
        if k == 1:
            return
        self.Q = self.Q * (1 / Fraction(k))
        self._record(rule, PolyMatrix([[MPoly.const(k), ZERO], [ZERO, ONE]]))

    def scale_B(self, s: Fraction, rule: str) -> None:
        """B ↦ s·B."""
        if s == 1:
            return
        s = Fraction(s)
        self.a, self.b, self.alpha, self.Q = self.a * s, self.b * s, self.alpha * s, self.Q * (s * s)
        self._record(rule, PolyMatrix([[ONE, ZERO], [ZERO, MPoly.const(s)]]))


def to_prenormal(R: LCA2, A: Element) -> PreNormalForm:
    g, s, t = bezout(A.x1, A.x2)
    if g != ONE:
        raise ValueError("A must be primitive")
    T0 = PolyMatrix([[A.x1, -t], [A.x2, s]])
    R0 = transform(R, T0)
    _expect(R0.q[0][0].is_zero(), "[A_λ A] ≠ 0 after completing the basis")
    ba = R0.q[1][0]
    _expect(ba.x2.is_zero(), "C[∂]A is not an ideal")
    _expect(ba.x1.deg_in("partial") <= 1, "deg_∂ [B_λ A] exceeds 1")
    a = ba.x1.coeff_in("partial", 0)
    b = ba.x1.coeff_in("partial", 1)
    Q, qbb = R0.q[1][1]
    alpha = qbb.coefficient(partial=1)
    _expect(qbb == _V * alpha, "B-part of [B_λ B] is not a multiple of 2λ+∂")
    steps = [Step("Lemma2.2-abelian-ideal-basis", T0, None if Q.is_zero() else int(Q.total_degree()))]
    pre = PreNormalForm(a, b, alpha, Q, BasisChange(T0), tuple(steps))
    if alpha != 0:
        fr = _Frame(pre)
        fr.scale_B(1 / alpha, "Lemma2.4-alpha-normalization")
        pre = PreNormalForm(fr.a, fr.b, fr.alpha, fr.Q, BasisChange(fr.T), tuple(fr.steps))
    _check_prenormal(pre)
    return pre


def _check_prenormal(p: PreNormalForm) -> None:
    if p.alpha == 0:
        _expect(p.b.is_zero(), "α = 0 forces b = 0")
    else:
        _expect(p.alpha == 1, "α must be normalized to 1")
        _expect(p.b.is_constant() and p.b.constant_term() in (0, 1), "b must be 0 or 1 when α = 1")
        if p.b.is_zero():
            _expect(p.a.is_zero(), "b = 0 forces a = 0 when α = 1")
        else:
            _expect(p.a.deg_in("lambda") <= 1, "b = 1 forces deg a ≤ 1")


def _qdeg(Q: MPoly):
    return Q.deg_in("partial")


def _kill_monomial(fr: _Frame, j: int, exps: tuple, rule: str) -> None:
    """Shift by a multiple of ∂^j that clears the coefficient of λ^e0·∂^e2 in Q."""
    q = fr.Q.coefficient(exps)
    if not q:
        return
    s = fr.delta(D ** j).coefficient(exps)
    _expect(s != 0, f"∂^{j} does not reach the monomial {exps}")
    fr.shift_B(-q / s * D ** j, rule)


def _run_case1(fr: _Frame) -> CanonicalForm:
    if fr.a.is_zero():
        _expect(not fr.Q.is_zero(), "Case 1 with a = 0 and Q = 0 is commutative")
        lc = fr.Q.leading_coefficient()
        fr.scale_A(lc, "Rnil-unit-leading-term")
        return Rnil(fr.Q, lc)
    m = int(fr.a.deg_in("lambda"))
    while fr.Q and _qdeg(fr.Q) > m:
        n = int(_qdeg(fr.Q))
        fn = fr.Q.coeff_in("partial", n)
        k = fn.leading_coefficient() / fr.a.leading_coefficient()
        _expect(fn == fr.a * k, "leading ∂-coefficient of Q is not proportional to a")
        fr.shift_B(-k * D ** n, "Prop2.6-proportionality")
        _expect(not fr.Q or _qdeg(fr.Q) < n, "proportionality step did not lower deg_∂ Q")
    if fr.Q:
        images = [fr.delta(D ** k) for k in range(m + 1)]
        coords = poly_combination(-fr.Q, images)
        _expect(coords is not None, "Q is not removable once deg_∂ Q ≤ deg a")
        fr.shift_B(MPoly.from_univariate(coords), "Prop2.6-final-correction")
        _expect(fr.Q.is_zero(), "Q survives the final correction")
    fr.scale_B(1 / fr.a.leading_coefficient(), "Rsol-monic-a")
    return Rsol(fr.a)


def _run_case2(fr: _Frame) -> CanonicalForm:
    if fr.Q:
        g = divide_by_2x_plus_y(fr.Q, "lambda", "partial")
        _expect(g.deg_in("lambda") <= 0, "Q/(2λ+∂) depends on λ")
        fr.shift_B(g, "Prop2.10-mu-zero")
    _expect(fr.Q.is_zero(), "Q survives the Case 2 reduction")
    return Rcs()


def _run_case3a(fr: _Frame, c: Fraction, d: Fraction) -> CanonicalForm:
    while fr.Q:
        m = int(_qdeg(fr.Q))
        _expect(m >= 1, "Q has a nonzero constant term")
        _kill_monomial(fr, m, (0, 0, m), "Prop2.12-lower-degree")
        _expect(not fr.Q or _qdeg(fr.Q) < m, "Case 3a step did not lower deg_∂ Q")
    return Rcdq(c, d, ZERO)


def _component(Q: MPoly, n: int) -> MPoly:
    for deg, part in Q.homogeneous_components():
        if deg == n:
            return part
    return ZERO


def _coords(Q: MPoly, n: int) -> list[Fraction]:
    part = _component(Q, n)
    if part.is_zero():
        return [Fraction(0)] * ((n - 1) // 2 + 1)
    return skew_coordinates(to_xy(part), n)


def _kill_coordinate(fr: _Frame, j: int, n: int, idx: int, rule: str) -> None:
    """Shift by a multiple of ∂^j that clears skew coordinate idx of Q_n."""
    q = _coords(fr.Q, n)[idx]
    if not q:
        return
    s = _coords(fr.delta(D ** j), n)[idx]
    _expect(s != 0, f"∂^{j} does not reach coordinate {idx} in degree {n}")
    fr.shift_B(-q / s * D ** j, rule)


def _run_case3b(fr: _Frame, c: Fraction, lemmas: list[str]) -> CanonicalForm:
    _expect(_component(fr.Q, 0).is_zero(), "Q has a constant term")
    if c != 1:
        _kill_coordinate(fr, 0, 1, 0, "Lemma2.13-kill-alpha1")
        _expect(_component(fr.Q, 1).is_zero(), "α₁ survives")
    if c != 0:
        _expect(_component(fr.Q, 2).is_zero(), "Q₂ ≠ 0 with c ≠ 0")
    if c != -1:
        _expect(_coords(fr.Q, 3)[0] == 0, "α₃ ≠ 0 with c ≠ -1")
    if c != 0:
        _kill_coordinate(fr, 2, 3, 1, "Lemma2.13-kill-beta3")
        _expect(_coords(fr.Q, 3)[1] == 0, "β₃ survives")
    _expect(_coords(fr.Q, 4)[0] == 0, "α₄ ≠ 0")
    if c != -1:
        _kill_coordinate(fr, 3, 4, 1, "Lemma2.13-kill-beta4")
        _expect(_component(fr.Q, 4).is_zero(), "β₄ survives")
    lemmas.append("Lemma2.13")
    top = int(fr.Q.total_degree()) if fr.Q else 0
    for n in range(5, top + 1):
        if _component(fr.Q, n).is_zero():
            continue
        if c != 3 - n:
            _kill_monomial(fr, n - 1, (1, 0, n - 1), "Cor2.16-kill-lambda-d^(n-1)")
            _expect(_component(fr.Q, n).is_zero(), f"Q_{n} survives after clearing λ∂^{n - 1}")
            lemmas.append(f"Cor2.16(n={n})")
            continue
        _kill_monomial(fr, n - 1, (2, 0, n - 2), "Lemma2.17-kill-lambda2-d^(n-2)")
        part = _component(fr.Q, n)
        if c in (-4, -6):
            _expect(table_coordinates(c, part) is not None, f"Q_{n} is not a multiple of the table row")
            lemmas.append(f"Lemma2.20(n={n})")
        else:
            _expect(part.is_zero(), f"Q_{n} ≠ 0 for n = 3-c = {n}")
            lemmas.append("Cor2.18" if c in (-2, -3) else f"Lemma2.19(n={n})")
    if fr.Q:
        params = table_coordinates(c, fr.Q)
        _expect(params is not None, f"residue {fr.Q} is not in the table row for c = {c}")
        beta, gamma = params
        fr.scale_A(beta if beta else gamma, "Theorem2.21-unit-parameter")
    return Rcdq(c, 0, fr.Q)


def _run(p: PreNormalForm, cert: Certificate | None = None) -> tuple[CanonicalForm, _Frame]:
    fr = _Frame(p)
    lemmas = cert.lemmas if cert is not None else []
    case = p.case
    if cert is not None:
        cert.case = case
    if case is CaseTag.CASE1:
        form = _run_case1(fr)
        lemmas.append("Prop2.6")
    elif case is CaseTag.CASE2:
        form = _run_case2(fr)
        lemmas.append("Prop2.10")
    elif case is CaseTag.CASE3A:
        form = _run_case3a(fr, p.c, p.d)
        lemmas.append("Prop2.12")
    else:
        form = _run_case3b(fr, p.c, lemmas)
    return form, fr


def _expect_case(p: PreNormalForm, case: CaseTag) -> None:
    if p.case is not case:
        raise ValueError(f"pre-normal form is in {p.case.value}, not {case.value}")


def reduce_case1(p: PreNormalForm) -> CanonicalForm:
    _expect_case(p, CaseTag.CASE1)
    return _run(p)[0]


def reduce_case2(p: PreNormalForm) -> CanonicalForm:
    _expect_case(p, CaseTag.CASE2)
    return _run(p)[0]


def reduce_case3a(p: PreNormalForm) -> CanonicalForm:
    _expect_case(p, CaseTag.CASE3A)
    return _run(p)[0]


def reduce_case3b(p: PreNormalForm) -> CanonicalForm:
    _expect_case(p, CaseTag.CASE3B)
    return _run(p)[0]


def classify(R: LCA2, degree_bound: int | None = None) -> tuple[CanonicalForm, BasisChange, Certificate]:
    """Canonical form, the basis change reaching it, and the audit trail."""
    if not R.validated:
        R = validate(R)
    cert = Certificate()
    if R.is_commutative():
        cert.notes["verdict"] = "all structure polynomials vanish"
        return Commutative(), BasisChange.identity(), cert
    found = find_abelian_vector(R, degree_bound)
    if isinstance(found, NotFound):
        Rp = derived_algebra(R)
        Z = center(R)
        proven = found.semisimple and Rp.is_full() and Z.is_zero()
        cert.notes.update(
            {
                "verdict": "Vir⊕Vir" if proven else "semisimple up to degree bound",
                "reason": found.reason,
                "derived_equals_R": Rp.is_full(),
                "center_trivial": Z.is_zero(),
            }
        )
        return SemisimpleVirVir(qualified=not proven), BasisChange.identity(), cert
    cert.notes["abelian_vector"] = [found.x1.to_literal(), found.x2.to_literal()]
    pre = to_prenormal(R, found)
    form, fr = _run(pre, cert)
    cert.steps = fr.steps
    change = BasisChange(fr.T)
    if transform(R, change.m) != form.algebra():
        raise InternalInconsistencyError("basis change does not reproduce the canonical structure polynomials")
    cert.notes["revalidated"] = True
    return form, change, cert


# scrambling


_SCALARS = [Fraction(x) for x in (1, -1, 2, -2, 3, -3)] + [Fraction(1, 2), Fraction(-1, 2), Fraction(1, 3), Fraction(-1, 3)]


def _random_poly(rng: random.Random, deg: int) -> MPoly:
    coeffs = [Fraction(rng.randint(-3, 3)) for _ in range(deg + 1)]
    if deg >= 0 and coeffs[-1] == 0:
        coeffs[-1] = Fraction(rng.choice([-2, -1, 1, 2]))
    return MPoly.from_univariate(coeffs)


def random_unimodular(rng: random.Random, max_deg: int) -> PolyMatrix:
    """diag(s₁, s₂)·E₁·E₂ with E elementary triangular, entries of degree ≤ max_deg."""
    deg = rng.randint(0, max_deg)
    dp = rng.randint(0, deg)
    p = _random_poly(rng, dp)
    q = _random_poly(rng, deg - dp) if rng.random() < 0.8 else ZERO
    up = PolyMatrix([[ONE, p], [ZERO, ONE]])
    low = PolyMatrix([[ONE, ZERO], [q, ONE]])
    M = up @ low if rng.random() < 0.5 else low @ up
    if rng.random() < 0.3:
        M = PolyMatrix([[ZERO, ONE], [ONE, ZERO]]) @ M
    S = PolyMatrix([[MPoly.const(rng.choice(_SCALARS)), ZERO], [ZERO, MPoly.const(rng.choice(_SCALARS))]])
    return S @ M


def scramble(R: LCA2, seed: int, max_deg: int = 3) -> tuple[LCA2, BasisChange]:
    """R written in a random basis: returns (transform(R, T), T)."""
    if not R.validated:
        R = validate(R)
    rng = random.Random(seed)
    T = random_unimodular(rng, max_deg)
    return transform(R, T), BasisChange(T)
