"""Rank-two Lie conformal algebras given by structure polynomials.

The algebra C[∂]X¹ ⊕ C[∂]X² is fixed by [X^i_λ X^j] = Σ_k Q_{ij}^k(λ,∂) X^k.
Indices in the public helpers are 1-based; the stored table ``q`` is 0-based.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import NamedTuple, Sequence

from .poly import MPoly, PolyMatrix, LAM, MU, D, ZERO, ONE, poly_sum
from .skewsym import is_skew_lambda
from .linalg import poly_combination


class Element(NamedTuple):
    """f(∂)X¹ + g(∂)X²."""

    x1: MPoly
    x2: MPoly


class BracketValue(NamedTuple):
    """X¹- and X²-components of a λ-bracket, polynomials in (λ, ∂)."""

    x1: MPoly
    x2: MPoly

    def is_zero(self) -> bool:
        return self.x1.is_zero() and self.x2.is_zero()


GEN = (Element(ONE, ZERO), Element(ZERO, ONE))

_NEG_SHIFT = {"lambda": -LAM - D}
_TO_MINUS_LAMBDA = {"partial": -LAM}
_TO_LAMBDA_PLUS_D = {"partial": LAM + D}


def skew_partner(bv: BracketValue) -> BracketValue:
    """The value -P(-λ-∂, ∂) that skew-symmetry assigns to the reversed pair."""
    return BracketValue(*(-p.substitute(_NEG_SHIFT) for p in bv))


@dataclass(frozen=True)
class LCA2:
    q: tuple[tuple[BracketValue, BracketValue], tuple[BracketValue, BracketValue]]
    validated: bool = field(default=False, compare=False)

    def Q(self, i: int, j: int, k: int) -> MPoly:
        """Structure polynomial Q_{ij}^k with 1-based indices."""
        return self.q[i - 1][j - 1][k - 1]

    def polys(self) -> list[MPoly]:
        return [p for row in self.q for bv in row for p in bv]

    def is_commutative(self) -> bool:
        return all(p.is_zero() for p in self.polys())

    def degrees(self) -> tuple[int, int]:
        """Maximal λ-degree and ∂-degree over all structure polynomials."""
        nl = max((p.deg_in("lambda") for p in self.polys() if p), default=0)
        nd = max((p.deg_in("partial") for p in self.polys() if p), default=0)
        return int(nl), int(nd)

    def total_degree(self) -> int:
        return int(max((p.total_degree() for p in self.polys() if p), default=0))

    def __str__(self) -> str:
        lines = []
        for i in range(2):
            for j in range(2):
                a, b = self.q[i][j]
                lines.append(f"[X{i + 1}_λ X{j + 1}] = ({a})·X1 + ({b})·X2")
        return "\n".join(lines)


def make_algebra(q11: Sequence, q12: Sequence, q22: Sequence, q21: Sequence | None = None) -> LCA2:
    """Assemble an LCA2; the (2,1) entry defaults to the skew partner of (1,2)."""
    b11 = BracketValue(*map(_poly, q11))
    b12 = BracketValue(*map(_poly, q12))
    b22 = BracketValue(*map(_poly, q22))
    b21 = skew_partner(b12) if q21 is None else BracketValue(*map(_poly, q21))
    return LCA2(((b11, b12), (b21, b22)))


def _poly(p) -> MPoly:
    return p if isinstance(p, MPoly) else MPoly.const(p)


# brackets and n-th products


def _elem_at(u: Element, sub: dict) -> tuple[MPoly, MPoly]:
    return (u.x1.substitute(sub), u.x2.substitute(sub))


def bracket(R: LCA2, u: Element, v: Element) -> BracketValue:
    """[u_λ v] extended from generators by sesquilinearity."""
    um = _elem_at(u, _TO_MINUS_LAMBDA)
    vp = _elem_at(v, _TO_LAMBDA_PLUS_D)
    out = []
    for k in range(2):
        terms = []
        for i in range(2):
            if um[i].is_zero():
                continue
            for j in range(2):
                if vp[j].is_zero():
                    continue
                qk = R.q[i][j][k]
                if qk:
                    terms.append(um[i] * vp[j] * qk)
        out.append(poly_sum(terms))
    return BracketValue(*out)


def nth_products(bv: BracketValue) -> list[tuple[int, Element]]:
    """[(n, a_(n)b)] with a_(n)b = n!·(coefficient of λⁿ); zero products omitted."""
    c1 = bv.x1.coeffs_in("lambda")
    c2 = bv.x2.coeffs_in("lambda")
    out = []
    for n in range(max(len(c1), len(c2))):
        f = c1[n] if n < len(c1) else ZERO
        g = c2[n] if n < len(c2) else ZERO
        if f or g:
            out.append((n, Element(f * factorial(n), g * factorial(n))))
    return out


def nth_product(R: LCA2, u: Element, v: Element, n: int) -> Element:
    bv = bracket(R, u, v)
    return Element(bv.x1.coeff_in("lambda", n) * factorial(n), bv.x2.coeff_in("lambda", n) * factorial(n))


# axiom checkers


@dataclass
class ValidationReport:
    valid: bool
    residuals: dict = field(default_factory=dict)
    checked: int = 0

    def summary(self) -> str:
        if self.valid:
            return f"valid ({self.checked} identities checked)"
        lines = [f"invalid: {len(self.residuals)} of {self.checked} identities fail"]
        for key, r in self.residuals.items():
            shown = f"({r[0]}, {r[1]})" if isinstance(r, tuple) else str(r)
            lines.append(f"  {key}: {shown}")
        return "\n".join(lines)


def _substitutions(R: LCA2) -> dict:
    subs = {
        "mu,l+d": {"lambda": MU, "partial": LAM + D},
        "l,d": None,
        "l,m+d": {"partial": MU + D},
        "m,d": {"lambda": MU},
        "l,-l-m": {"partial": -LAM - MU},
        "l+m,d": {"lambda": LAM + MU},
    }
    table = {}
    for name, s in subs.items():
        table[name] = [
            [[p if s is None else p.substitute(s) for p in R.q[i][j]] for j in range(2)] for i in range(2)
        ]
    return table


def check_axioms_lambda(R: LCA2) -> ValidationReport:
    """Skew-symmetry and λ-Jacobi identities on generators, with residuals."""
    res = {}
    checked = 0
    for i in range(2):
        for j in range(2):
            partner = skew_partner(R.q[j][i])
            for k in range(2):
                checked += 1
                r = R.q[i][j][k] - partner[k]
                if r:
                    res[("skew", i + 1, j + 1, k + 1)] = r
    S = _substitutions(R)
    A, B, C, Dm, E, F = (S[n] for n in ("mu,l+d", "l,d", "l,m+d", "m,d", "l,-l-m", "l+m,d"))
    for i in range(2):
        for j in range(2):
            for k in range(2):
                for t in range(2):
                    checked += 1
                    terms = []
                    for s in range(2):
                        terms.append(A[j][k][s] * B[i][s][t])
                        terms.append(-(C[i][k][s] * Dm[j][s][t]))
                        terms.append(-(E[i][j][s] * F[s][k][t]))
                    r = poly_sum(terms)
                    if r:
                        res[("jacobi", i + 1, j + 1, k + 1, t + 1)] = r
    return ValidationReport(not res, res, checked)


def _elem_sub(a: Element, b: Element) -> Element:
    return Element(a.x1 - b.x1, a.x2 - b.x2)


def _elem_add(a: Element, b: Element) -> Element:
    return Element(a.x1 + b.x1, a.x2 + b.x2)


def _elem_scale(a: Element, c) -> Element:
    return Element(a.x1 * c, a.x2 * c)


def _elem_is_zero(a: Element) -> bool:
    return a.x1.is_zero() and a.x2.is_zero()


def _products(R: LCA2, u: Element, v: Element) -> dict[int, Element]:
    return dict(nth_products(bracket(R, u, v)))


def check_axioms_nth(R: LCA2) -> ValidationReport:
    """Axioms (C1)-(C3) of the n-th product formulation, on generators.

    (C0) holds for any polynomial data. The range m, n ≤ 2·N_λ + N_∂ + 1 covers
    every product that can be nonzero.
    """
    res = {}
    checked = 0
    zero = Element(ZERO, ZERO)
    nl, nd = R.degrees()
    K = 2 * nl + nd + 1
    prod = {(i, j): _products(R, GEN[i], GEN[j]) for i in range(2) for j in range(2)}

    # (C1) on generators
    dgen = [Element(g.x1 * D, g.x2 * D) for g in GEN]
    for i in range(2):
        for j in range(2):
            left = _products(R, dgen[i], GEN[j])
            right = _products(R, GEN[i], dgen[j])
            base = prod[(i, j)]
            for n in range(K + 2):
                checked += 2
                want = _elem_scale(base.get(n - 1, zero), -n) if n else zero
                r = _elem_sub(left.get(n, zero), want)
                if not _elem_is_zero(r):
                    res[("C1a", i + 1, j + 1, n)] = r
                b = base.get(n, zero)
                want2 = _elem_add(Element(b.x1 * D, b.x2 * D), _elem_scale(base.get(n - 1, zero), n) if n else zero)
                r = _elem_sub(right.get(n, zero), want2)
                if not _elem_is_zero(r):
                    res[("C1b", i + 1, j + 1, n)] = r

    # (C2)
    for i in range(2):
        for j in range(2):
            ab = prod[(i, j)]
            ba = prod[(j, i)]
            for n in range(K + 1):
                checked += 1
                acc = zero
                for m, e in ab.items():
                    jj = m - n
                    if jj < 0:
                        continue
                    c = Fraction((-1) ** (n + jj + 1), factorial(jj))
                    acc = _elem_add(acc, Element(e.x1 * D ** jj * c, e.x2 * D ** jj * c))
                r = _elem_sub(ba.get(n, zero), acc)
                if not _elem_is_zero(r):
                    res[("C2", j + 1, i + 1, n)] = r

    # (C3)
    for a in range(2):
        for b in range(2):
            for c in range(2):
                bc = prod[(b, c)]
                ac = prod[(a, c)]
                ab = prod[(a, b)]
                a_of_bc = {n: _products(R, GEN[a], e) for n, e in bc.items()}
                b_of_ac = {m: _products(R, GEN[b], e) for m, e in ac.items()}
                abj_c = {j: _products(R, e, GEN[c]) for j, e in ab.items()}
                for m in range(K + 1):
                    for n in range(K + 1):
                        checked += 1
                        lhs = _elem_sub(a_of_bc.get(n, {}).get(m, zero), b_of_ac.get(m, {}).get(n, zero))
                        rhs = zero
                        for j in range(m + 1):
                            e = abj_c.get(j, {}).get(m + n - j)
                            if e is not None:
                                rhs = _elem_add(rhs, _elem_scale(e, comb(m, j)))
                        r = _elem_sub(lhs, rhs)
                        if not _elem_is_zero(r):
                            res[("C3", a + 1, b + 1, c + 1, m, n)] = r
    return ValidationReport(not res, res, checked)


def validate(R: LCA2) -> LCA2:
    """Return R flagged as validated, or raise ValueError with the residuals."""
    report = check_axioms_lambda(R)
    if not report.valid:
        raise ValueError("structure polynomials violate the axioms:\n" + report.summary())
    return LCA2(R.q, validated=True)


# table of Q_c rows

_U = LAM * LAM + LAM * D
_V = 2 * LAM + D

TABLE_ROWS: dict[int, tuple[MPoly, ...]] = {
    1: (_V,),
    0: (_V * _U, _V * D),
    -1: (_V * D ** 2, _V * _U * D),
    -4: (_V * _U ** 3,),
    -6: (_V * (11 * _U ** 4 + 2 * _U ** 3 * D ** 2),),
}


def table_coordinates(c, Q: MPoly) -> tuple[Fraction, Fraction] | None:
    """(β, γ) with Q = β·row₁ + γ·row₂ for the table row of c, or None."""
    c = Fraction(c)
    if Q.is_zero():
        return Fraction(0), Fraction(0)
    if c.denominator != 1 or int(c) not in TABLE_ROWS:
        return None
    rows = TABLE_ROWS[int(c)]
    coords = poly_combination(Q, rows)
    if coords is None:
        return None
    beta = coords[0]
    gamma = coords[1] if len(coords) > 1 else Fraction(0)
    return beta, gamma


def table_polynomial(c: int, beta=1, gamma=0) -> MPoly:
    rows = TABLE_ROWS[c]
    out = rows[0] * Fraction(beta)
    if len(rows) > 1:
        out = out + rows[1] * Fraction(gamma)
    elif gamma:
        raise ValueError(f"the c={c} row has a single parameter")
    return out


# constructors


def _require_lambda_only(p: MPoly, name: str) -> None:
    if p.variables() - {"lambda"}:
        raise ValueError(f"{name} must be a polynomial in λ only")


def _require_skew(p: MPoly, name: str) -> None:
    if not is_skew_lambda(p):
        raise ValueError(f"{name} is not skew-symmetric: {p}")


def commutative2() -> LCA2:
    z = (ZERO, ZERO)
    return validate(make_algebra(z, z, z))


def vir() -> LCA2:
    """Vir ⊕ (zero module): [X¹_λ X¹] = (2λ+∂)X¹, all else 0."""
    z = (ZERO, ZERO)
    return validate(make_algebra((_V, ZERO), z, z))


def r_ss() -> LCA2:
    z = (ZERO, ZERO)
    return validate(make_algebra((_V, ZERO), z, (ZERO, _V)))


def r_cs() -> LCA2:
    """X¹ = K central, X² = L Virasoro."""
    z = (ZERO, ZERO)
    return validate(make_algebra(z, z, (ZERO, _V)))


def current2(c1, c2) -> LCA2:
    """Current algebra of the 2-dim Lie algebra [e₁, e₂] = c1·e₁ + c2·e₂."""
    z = (ZERO, ZERO)
    return validate(make_algebra(z, (MPoly.const(c1), MPoly.const(c2)), z))


def from_prenormal(a: MPoly, b: MPoly, alpha, Q: MPoly) -> LCA2:
    """[A_λ A] = 0, [B_λ A] = (a(λ)+b(λ)∂)A, [B_λ B] = Q·A + α(2λ+∂)B with X¹ = A, X² = B."""
    z = (ZERO, ZERO)
    ba = BracketValue(a + b * D, ZERO)
    return make_algebra(z, skew_partner(ba), (Q, _V * Fraction(alpha)), q21=ba)


def r_nil(Q: MPoly) -> LCA2:
    _require_skew(Q, "Q")
    return validate(from_prenormal(ZERO, ZERO, 0, Q))


def r_sol(a: MPoly) -> LCA2:
    _require_lambda_only(a, "a")
    return validate(from_prenormal(a, ZERO, 0, ZERO))


def r_cdq(c, d, Qc: MPoly = ZERO) -> LCA2:
    c, d = Fraction(c), Fraction(d)
    _require_skew(Qc, "Qc")
    if Qc:
        if d != 0:
            raise ValueError("Qc must vanish when d ≠ 0")
        if table_coordinates(c, Qc) is None:
            raise ValueError(f"Qc = {Qc} is not in the table row for c = {c}")
    return validate(from_prenormal(c * LAM + d, ONE, 1, Qc))


# rank one


@dataclass(frozen=True)
class Rank1Verdict:
    kind: str  # "Invalid" | "Commutative" | "Virasoro"
    alpha: Fraction | None = None
    residual: MPoly | None = None


def classify_rank1(q: MPoly) -> Rank1Verdict:
    if q.variables() - {"lambda", "partial"}:
        raise ValueError("rank-one structure polynomial must be in λ, ∂")
    skew = q + q.substitute(_NEG_SHIFT)
    if skew:
        return Rank1Verdict("Invalid", residual=skew)
    jac = (
        q.substitute({"lambda": MU, "partial": LAM + D}) * q
        - q.substitute({"partial": MU + D}) * q.substitute({"lambda": MU})
        - q.substitute({"partial": -LAM - MU}) * q.substitute({"lambda": LAM + MU})
    )
    if jac:
        return Rank1Verdict("Invalid", residual=jac)
    if q.is_zero():
        return Rank1Verdict("Commutative")
    alpha = q.coefficient(partial=1)
    if q != _V * alpha:
        raise AssertionError(f"valid rank-one bracket of unexpected shape: {q}")
    return Rank1Verdict("Virasoro", alpha=alpha)


# change of basis


def transform(R: LCA2, T: PolyMatrix) -> LCA2:
    """Structure polynomials in the basis Y_j = Σ_k T_kj(∂)X^k.

    Q'_{ij}^m = Σ T_ki(-λ)·T_lj(λ+∂)·Q_{kl}^n(λ,∂)·(T⁻¹)_{mn}(∂).
    T must have a nonzero constant determinant; validity carries over.
    """
    Tinv = T.inverse()
    Tm = [[T[k, i].substitute(_TO_MINUS_LAMBDA) for i in range(2)] for k in range(2)]
    Tp = [[T[l, j].substitute(_TO_LAMBDA_PLUS_D) for j in range(2)] for l in range(2)]

    def entry(i: int, j: int) -> BracketValue:
        V = []
        for n in range(2):
            terms = []
            for k in range(2):
                if Tm[k][i].is_zero():
                    continue
                for l in range(2):
                    qn = R.q[k][l][n]
                    if qn and Tp[l][j]:
                        terms.append(Tm[k][i] * Tp[l][j] * qn)
            V.append(poly_sum(terms))
        return BracketValue(*(poly_sum(V[n] * Tinv[m, n] for n in range(2) if V[n]) for m in range(2)))

    b11, b12, b22 = entry(0, 0), entry(0, 1), entry(1, 1)
    b21 = skew_partner(b12) if R.validated else entry(1, 0)
    return LCA2(((b11, b12), (b21, b22)), validated=R.validated)


# JSON file format


class AlgebraFormatError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


def _parse_poly(obj, path: str) -> MPoly:
    if not isinstance(obj, list):
        raise AlgebraFormatError(path, "polynomial must be a list of terms")
    for n, term in enumerate(obj):
        if not isinstance(term, dict):
            raise AlgebraFormatError(f"{path}[{n}]", "term must be an object")
        for key in ("num", "den"):
            if key in term and not isinstance(term[key], (str, int)):
                raise AlgebraFormatError(f"{path}[{n}].{key}", "expected a decimal string")
        if "num" not in term:
            raise AlgebraFormatError(f"{path}[{n}]", "missing 'num'")
        try:
            MPoly.from_literal([term])
        except (ValueError, TypeError) as exc:
            raise AlgebraFormatError(f"{path}[{n}]", str(exc)) from None
    return MPoly.from_literal(obj)


def _parse_pair(obj, path: str) -> tuple[MPoly, MPoly]:
    if not isinstance(obj, list) or len(obj) != 2:
        raise AlgebraFormatError(path, "expected a list of two polynomials")
    return _parse_poly(obj[0], f"{path}[0]"), _parse_poly(obj[1], f"{path}[1]")


def algebra_from_json(obj) -> LCA2:
    if not isinstance(obj, dict):
        raise AlgebraFormatError("$", "expected an object")
    if obj.get("rank") != 2:
        raise AlgebraFormatError("$.rank", "expected rank 2")
    br = obj.get("brackets")
    if not isinstance(br, dict):
        raise AlgebraFormatError("$.brackets", "expected an object")
    unknown = set(br) - {"1,1", "1,2", "2,1", "2,2"}
    if unknown:
        raise AlgebraFormatError("$.brackets", f"unknown keys {sorted(unknown)}")
    for key in ("1,1", "1,2", "2,2"):
        if key not in br:
            raise AlgebraFormatError("$.brackets", f"missing '{key}'")
    q = {k: _parse_pair(v, f"$.brackets.{k}") for k, v in br.items()}
    return make_algebra(q["1,1"], q["1,2"], q["2,2"], q.get("2,1"))


def rank1_from_json(obj) -> MPoly:
    if not isinstance(obj, dict) or obj.get("rank") != 1:
        raise AlgebraFormatError("$.rank", "expected rank 1")
    br = obj.get("brackets")
    if not isinstance(br, dict) or set(br) != {"1,1"}:
        raise AlgebraFormatError("$.brackets", "rank-one file carries exactly a '1,1' entry")
    v = br["1,1"]
    if not isinstance(v, list) or len(v) != 1:
        raise AlgebraFormatError("$.brackets.1,1", "expected a list with one polynomial")
    return _parse_poly(v[0], "$.brackets.1,1[0]")


def algebra_to_json(R: LCA2) -> dict:
    names = {(0, 0): "1,1", (0, 1): "1,2", (1, 0): "2,1", (1, 1): "2,2"}
    return {
        "rank": 2,
        "brackets": {names[(i, j)]: [p.to_literal() for p in R.q[i][j]] for i in range(2) for j in range(2)},
    }


def read_json(path: str):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraFormatError(f"{path}:{exc.lineno}:{exc.colno}", exc.msg) from None
