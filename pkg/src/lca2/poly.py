"""Exact sparse polynomials over the rationals in the fixed variables λ, µ, ∂, x, y.

Monomials are packed into a single integer (12 bits per exponent, λ in the most
significant field) so that monomial multiplication is integer addition and the
natural integer order is the lexicographic order λ > µ > ∂ > x > y.
Coefficients are stored as integer numerators over one positive common
denominator, kept in lowest terms.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence, Union

Rat = Fraction

VARS = ("lambda", "mu", "partial", "x", "y")
_INDEX = {name: i for i, name in enumerate(VARS)}
_PRETTY = ("λ", "µ", "∂", "x", "y")
_BITS = 12
_MASK = (1 << _BITS) - 1
_MAXEXP = _MASK
_SHIFT = tuple(_BITS * (len(VARS) - 1 - i) for i in range(len(VARS)))

NEG_INF = float("-inf")
"""Degree of the zero polynomial."""

Scalar = Union[int, Fraction]


def _pack(exps: Sequence[int]) -> int:
    key = 0
    for i, e in enumerate(exps):
        if e < 0 or e > _MAXEXP:
            raise ValueError(f"exponent {e} out of range")
        key |= e << _SHIFT[i]
    return key


def _unpack(key: int) -> tuple[int, ...]:
    return tuple((key >> s) & _MASK for s in _SHIFT)


def _exp(key: int, i: int) -> int:
    return (key >> _SHIFT[i]) & _MASK


def _var_index(v: str) -> int:
    try:
        return _INDEX[v]
    except KeyError:
        raise ValueError(f"unknown variable {v!r}; expected one of {VARS}") from None


def _normalize(t: dict, den: int) -> tuple[dict, int]:
    if not t:
        return t, 1
    if den < 0:
        den = -den
        t = {k: -v for k, v in t.items()}
    if den != 1:
        g = gcd(den, *t.values())
        if g != 1:
            den //= g
            t = {k: v // g for k, v in t.items()}
    return t, den


class MPoly:
    """Immutable polynomial with rational coefficients."""

    __slots__ = ("_t", "_den", "_hash", "_degs")

    def __init__(self, terms: Mapping[Sequence[int], Scalar] | None = None):
        t: dict[int, Fraction] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps) + (0,) * (len(VARS) - len(exps))
            c = Fraction(c)
            if c:
                k = _pack(exps)
                t[k] = t.get(k, 0) + c
        den = 1
        for c in t.values():
            den = den * c.denominator // gcd(den, c.denominator)
        nt = {k: int(c * den) for k, c in t.items() if c}
        self._set(*_normalize(nt, den))

    def _set(self, t: dict, den: int) -> None:
        self._t = t
        self._den = den
        self._hash = None
        self._degs = None

    @classmethod
    def _raw(cls, t: dict, den: int = 1, normalized: bool = False) -> "MPoly":
        p = cls.__new__(cls)
        if not normalized:
            t = {k: v for k, v in t.items() if v}
            t, den = _normalize(t, den)
        p._set(t, den)
        return p

    # constructors

    @classmethod
    def const(cls, c: Scalar) -> "MPoly":
        c = Fraction(c)
        if not c:
            return ZERO
        return cls._raw({0: c.numerator}, c.denominator, normalized=True)

    @classmethod
    def var(cls, name: str) -> "MPoly":
        return cls._raw({1 << _SHIFT[_var_index(name)]: 1}, 1, normalized=True)

    @classmethod
    def monomial(cls, coeff: Scalar = 1, **exps: int) -> "MPoly":
        e = [0] * len(VARS)
        for name, k in exps.items():
            e[_var_index(name)] = k
        return cls({tuple(e): coeff})

    @classmethod
    def from_univariate(cls, coeffs: Sequence[Scalar], v: str = "partial") -> "MPoly":
        """Build Σ coeffs[k]·v^k."""
        i = _var_index(v)
        den = 1
        fs = [Fraction(c) for c in coeffs]
        for c in fs:
            den = den * c.denominator // gcd(den, c.denominator)
        t = {k << _SHIFT[i]: int(c * den) for k, c in enumerate(fs) if c}
        return cls._raw(t, den)

    # inspection

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def __len__(self) -> int:
        return len(self._t)

    def terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in decreasing lexicographic order."""
        return [(_unpack(k), Fraction(v, self._den)) for k, v in sorted(self._t.items(), reverse=True)]

    def coefficient(self, exps: Sequence[int] = (), **named: int) -> Fraction:
        e = list(exps) + [0] * (len(VARS) - len(exps))
        for name, k in named.items():
            e[_var_index(name)] = k
        return Fraction(self._t.get(_pack(e), 0), self._den)

    def constant_term(self) -> Fraction:
        return Fraction(self._t.get(0, 0), self._den)

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def _degrees(self) -> tuple[int, ...]:
        if self._degs is None:
            d = [0] * len(VARS)
            for k in self._t:
                for i, s in enumerate(_SHIFT):
                    e = (k >> s) & _MASK
                    if e > d[i]:
                        d[i] = e
            self._degs = tuple(d)
        return self._degs

    def deg_in(self, v: str) -> Union[int, float]:
        if not self._t:
            return NEG_INF
        return self._degrees()[_var_index(v)]

    def total_degree(self) -> Union[int, float]:
        if not self._t:
            return NEG_INF
        return max(sum(_unpack(k)) for k in self._t)

    def variables(self) -> set[str]:
        return {VARS[i] for i, d in enumerate(self._degrees()) if d and self._t}

    def is_univariate(self, v: str = "partial") -> bool:
        return self.variables() <= {v}

    def leading_term(self) -> tuple[tuple[int, ...], Fraction]:
        """Lexicographically largest term (λ > µ > ∂ > x > y)."""
        if not self._t:
            raise ValueError("zero polynomial has no leading term")
        k = max(self._t)
        return _unpack(k), Fraction(self._t[k], self._den)

    def leading_coefficient(self) -> Fraction:
        return self.leading_term()[1]

    def coeff_in(self, v: str, k: int) -> "MPoly":
        """Coefficient of v^k, as a polynomial in the remaining variables."""
        i = _var_index(v)
        s = _SHIFT[i]
        t = {key - (k << s): c for key, c in self._t.items() if (key >> s) & _MASK == k}
        return MPoly._raw(t, self._den)

    def coeffs_in(self, v: str) -> list["MPoly"]:
        """Dense list [coeff_in(v, 0), ..., coeff_in(v, deg)]."""
        d = self.deg_in(v)
        if d == NEG_INF:
            return []
        i = _var_index(v)
        s = _SHIFT[i]
        buckets: list[dict] = [{} for _ in range(int(d) + 1)]
        for key, c in self._t.items():
            e = (key >> s) & _MASK
            buckets[e][key - (e << s)] = c
        return [MPoly._raw(b, self._den) for b in buckets]

    def homogeneous_components(self) -> list[tuple[int, "MPoly"]]:
        parts: dict[int, dict] = {}
        for key, c in self._t.items():
            parts.setdefault(sum(_unpack(key)), {})[key] = c
        return [(n, MPoly._raw(parts[n], self._den)) for n in sorted(parts)]

    def uni_coeffs(self, v: str = "partial") -> list[Fraction]:
        """Dense coefficient list (lowest degree first) of a univariate polynomial."""
        if not self.is_univariate(v):
            raise ValueError(f"{self} is not univariate in {v}")
        if not self._t:
            return []
        s = _SHIFT[_var_index(v)]
        out = [Fraction(0)] * (int(self.deg_in(v)) + 1)
        for key, c in self._t.items():
            out[key >> s] = Fraction(c, self._den)
        return out

    # arithmetic

    def __neg__(self) -> "MPoly":
        return MPoly._raw({k: -v for k, v in self._t.items()}, self._den, normalized=True)

    def __add__(self, other) -> "MPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._t:
            return self
        if not self._t:
            return other
        da, db = self._den, other._den
        if da == db:
            t = dict(self._t)
            for k, v in other._t.items():
                t[k] = t.get(k, 0) + v
            return MPoly._raw(t, da)
        L = da // gcd(da, db) * db
        fa, fb = L // da, L // db
        t = {k: v * fa for k, v in self._t.items()}
        for k, v in other._t.items():
            t[k] = t.get(k, 0) + v * fb
        return MPoly._raw(t, L)

    __radd__ = __add__

    def __sub__(self, other) -> "MPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "MPoly":
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if not other or not self._t:
                return ZERO
            n = other.numerator
            return MPoly._raw({k: v * n for k, v in self._t.items()}, self._den * other.denominator)
        if not isinstance(other, MPoly):
            return NotImplemented
        a, b = self._t, other._t
        if not a or not b:
            return ZERO
        da, db = self._degrees(), other._degrees()
        for x, y in zip(da, db):
            if x + y > _MAXEXP:
                raise OverflowError("exponent exceeds packed monomial range")
        if len(a) < len(b):
            a, b = b, a
        t: dict[int, int] = {}
        get = t.get
        for kb, vb in b.items():
            for ka, va in a.items():
                k = ka + kb
                t[k] = get(k, 0) + va * vb
        return MPoly._raw(t, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "MPoly":
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if not other:
                raise ZeroDivisionError("polynomial division by zero")
            return self * (1 / other)
        return NotImplemented

    def __pow__(self, n: int) -> "MPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, MPoly):
            return self._den == other._den and self._t == other._t
        if isinstance(other, (int, Fraction)):
            return self == MPoly.const(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((frozenset(self._t.items()), self._den))
        return self._hash

    # substitution

    def substitute(self, bindings: Mapping[str, Union["MPoly", Scalar]]) -> "MPoly":
        """Simultaneously replace variables by polynomials."""
        if not bindings or not self._t:
            return self
        idx = [(_var_index(v), _coerce(p)) for v, p in bindings.items()]
        bound_mask = 0
        for i, _ in idx:
            bound_mask |= _MASK << _SHIFT[i]
        groups: dict[int, dict[int, int]] = {}
        for key, c in self._t.items():
            groups.setdefault(key & bound_mask, {})[key & ~bound_mask] = c
        powers: list[dict[int, MPoly]] = [{0: ONE} for _ in idx]

        def power(slot: int, e: int) -> MPoly:
            cache = powers[slot]
            if e not in cache:
                best = max(k for k in cache if k <= e)
                p = cache[best]
                base = idx[slot][1]
                for k in range(best + 1, e + 1):
                    p = p * base
                    cache[k] = p
            return cache[e]

        acc = _Accumulator()
        for bkey, rest in groups.items():
            factor = None
            for slot, (i, _) in enumerate(idx):
                e = _exp(bkey, i)
                if e:
                    pw = power(slot, e)
                    factor = pw if factor is None else factor * pw
            cof = MPoly._raw(rest, self._den, normalized=False)
            acc.add(cof if factor is None else cof * factor)
        return acc.result()

    def __call__(self, **bindings) -> "MPoly":
        return self.substitute(bindings)

    def rename(self, mapping: Mapping[str, str]) -> "MPoly":
        return self.substitute({a: MPoly.var(b) for a, b in mapping.items()})

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        """Value at a rational point; every occurring variable must be given."""
        missing = self.variables() - set(values)
        if missing:
            raise ValueError(f"no value for {sorted(missing)}")
        pts = [Fraction(values.get(v, 0)) for v in VARS]
        total = Fraction(0)
        for key, c in self._t.items():
            term = Fraction(c)
            for i, s in enumerate(_SHIFT):
                e = (key >> s) & _MASK
                if e:
                    term *= pts[i] ** e
            total += term
        return total / self._den

    def eval_mod(self, values: Mapping[str, int], prime: int) -> int:
        """Value modulo a prime at an integer point."""
        pts = [values.get(v, 0) % prime for v in VARS]
        total = 0
        for key, c in self._t.items():
            term = c
            for i, s in enumerate(_SHIFT):
                e = (key >> s) & _MASK
                if e:
                    term = term * pow(pts[i], e, prime) % prime
            total += term
        return total * pow(self._den, -1, prime) % prime

    # serialization

    def to_literal(self) -> list[dict]:
        out = []
        for exps, c in self.terms():
            term = {"num": str(c.numerator), "den": str(c.denominator)}
            for name, e in zip(VARS, exps):
                if e:
                    term[name] = e
            out.append(term)
        return out

    @classmethod
    def from_literal(cls, lit: Iterable[Mapping]) -> "MPoly":
        terms: dict[tuple[int, ...], Fraction] = {}
        for term in lit:
            unknown = set(term) - set(VARS) - {"num", "den"}
            if unknown:
                raise ValueError(f"unknown term keys {sorted(unknown)}")
            num = int(str(term["num"]))
            den = int(str(term.get("den", "1")))
            if den == 0:
                raise ValueError("zero denominator")
            exps = []
            for name in VARS:
                e = term.get(name, 0)
                if not isinstance(e, int) or isinstance(e, bool) or e < 0:
                    raise ValueError(f"exponent of {name} must be a nonnegative integer")
                exps.append(e)
            key = tuple(exps)
            terms[key] = terms.get(key, 0) + Fraction(num, den)
        return cls(terms)

    # display

    def __repr__(self) -> str:
        return f"MPoly({self})"

    def __str__(self) -> str:
        if not self._t:
            return "0"
        parts = []
        for exps, c in self.terms():
            mono = "".join(
                _PRETTY[i] + (f"^{e}" if e > 1 else "") for i, e in enumerate(exps) if e
            )
            if mono:
                if c == 1:
                    s = mono
                elif c == -1:
                    s = "-" + mono
                else:
                    s = f"{c}*{mono}" if c.denominator == 1 else f"({c})*{mono}"
            else:
                s = str(c)
            parts.append(s)
        out = parts[0]
        for s in parts[1:]:
            out += " - " + s[1:] if s.startswith("-") else " + " + s
        return out


class _Accumulator:
    """Sums many polynomials with one normalization at the end."""

    def __init__(self):
        self._parts: dict[int, dict[int, int]] = {}

    def add(self, p: MPoly) -> None:
        if not p._t:
            return
        t = self._parts.setdefault(p._den, {})
        for k, v in p._t.items():
            t[k] = t.get(k, 0) + v

    def result(self) -> MPoly:
        if not self._parts:
            return ZERO
        L = 1
        for d in self._parts:
            L = L // gcd(L, d) * d
        t: dict[int, int] = {}
        for d, part in self._parts.items():
            f = L // d
            for k, v in part.items():
                t[k] = t.get(k, 0) + v * f
        return MPoly._raw(t, L)


def poly_sum(polys: Iterable[MPoly]) -> MPoly:
    acc = _Accumulator()
    for p in polys:
        acc.add(_coerce(p))
    return acc.result()


def _coerce(x) -> MPoly:
    if isinstance(x, MPoly):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return MPoly.const(x)
    return NotImplemented


ZERO = MPoly._raw({}, 1, normalized=True)
ONE = MPoly._raw({0: 1}, 1, normalized=True)
LAM = MPoly.var("lambda")
MU = MPoly.var("mu")
D = MPoly.var("partial")
X = MPoly.var("x")
Y = MPoly.var("y")


def arith(p: MPoly, q, op: str) -> MPoly:
    """Ring operation by name: add, sub, mul, or scale (q a rational)."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "scale":
        return p * Fraction(q)
    raise ValueError(f"unknown operation {op!r}")


def coeff_in(p: MPoly, v: str, k: int) -> MPoly:
    return p.coeff_in(v, k)


def deg_in(p: MPoly, v: str):
    return p.deg_in(v)


def homogeneous_components(p: MPoly) -> list[tuple[int, MPoly]]:
    return p.homogeneous_components()


def substitute(p: MPoly, bindings: Mapping[str, Union[MPoly, Scalar]]) -> MPoly:
    return p.substitute(bindings)


# univariate arithmetic on dense Fraction lists (lowest degree first)


def _trim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def _udivmod(a: list, b: list) -> tuple[list, list]:
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    r = _trim(list(a))
    if len(r) < len(b):
        return [], r
    q = [Fraction(0)] * (len(r) - len(b) + 1)
    lb = b[-1]
    db = len(b) - 1
    while len(r) >= len(b) and r:
        c = r[-1] / lb
        s = len(r) - 1 - db
        q[s] = c
        for i, bi in enumerate(b):
            r[s + i] -= c * bi
        r.pop()
        _trim(r)
    return _trim(q), r


def _umul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _usub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _uadd(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _uscale(a: list, c) -> list:
    return _trim([x * c for x in a])


def divmod_uni(f: MPoly, g: MPoly, v: str = "partial") -> tuple[MPoly, MPoly]:
    q, r = _udivmod(f.uni_coeffs(v), g.uni_coeffs(v))
    return MPoly.from_univariate(q, v), MPoly.from_univariate(r, v)


def monic(f: MPoly, v: str = "partial") -> MPoly:
    if not f:
        return f
    c = f.uni_coeffs(v)
    return f * (1 / c[-1])


def bezout(f: MPoly, g: MPoly, v: str = "partial") -> tuple[MPoly, MPoly, MPoly]:
    """Extended Euclid in ℚ[v]: returns (gcd, s, t) with s·f + t·g = gcd, gcd monic."""
    a, b = f.uni_coeffs(v), g.uni_coeffs(v)
    if not a and not b:
        raise ValueError("bezout of two zero polynomials")
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while b:
        q, r = _udivmod(a, b)
        a, b = b, r
        s0, s1 = s1, _usub(s0, _umul(q, s1))
        t0, t1 = t1, _usub(t0, _umul(q, t1))
    lc = a[-1]
    return (
        MPoly.from_univariate(_uscale(a, 1 / lc), v),
        MPoly.from_univariate(_uscale(s0, 1 / lc), v),
        MPoly.from_univariate(_uscale(t0, 1 / lc), v),
    )


def gcd_uni(f: MPoly, g: MPoly, v: str = "partial") -> MPoly:
    if not f and not g:
        return ZERO
    return bezout(f, g, v)[0]


class PolyMatrix:
    """Matrix of polynomials; entries used here are univariate in ∂."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[Union[MPoly, Scalar]]]):
        rows = tuple(tuple(_coerce(e) for e in r) for r in rows)
        if not rows or not rows[0]:
            raise ValueError("matrix must have positive dimensions")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        self.rows = rows

    @classmethod
    def identity(cls, n: int = 2) -> "PolyMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    def __getitem__(self, ij: tuple[int, int]) -> MPoly:
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple[MPoly, ...]:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(list(zip(*self.rows)))

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        n, m = self.shape
        m2, k = other.shape
        if m != m2:
            raise ValueError("shape mismatch")
        return PolyMatrix(
            [[poly_sum(self.rows[i][l] * other.rows[l][j] for l in range(m)) for j in range(k)] for i in range(n)]
        )

    def scale(self, c: Scalar) -> "PolyMatrix":
        return PolyMatrix([[e * Fraction(c) for e in r] for r in self.rows])

    def det(self) -> MPoly:
        n, m = self.shape
        if n != m:
            raise ValueError("determinant of a non-square matrix")
        if n == 1:
            return self.rows[0][0]
        if n == 2:
            (a, b), (c, d) = self.rows
            return a * d - b * c
        total = ZERO
        for j in range(n):
            minor = PolyMatrix([r[:j] + r[j + 1:] for r in self.rows[1:]])
            term = self.rows[0][j] * minor.det()
            total = total + term if j % 2 == 0 else total - term
        return total

    def inverse(self) -> "PolyMatrix":
        """Inverse of a 2×2 matrix whose determinant is a nonzero constant."""
        if self.shape != (2, 2):
            raise ValueError("inverse implemented for 2×2 matrices")
        det = self.det()
        if not det or not det.is_constant():
            raise ValueError("matrix is not invertible over the polynomial ring")
        inv = 1 / det.constant_term()
        (a, b), (c, d) = self.rows
        return PolyMatrix([[d * inv, -b * inv], [-c * inv, a * inv]])

    def is_univariate(self, v: str = "partial") -> bool:
        return all(e.is_univariate(v) for r in self.rows for e in r)

    def max_degree(self, v: str = "partial"):
        return max(e.deg_in(v) for r in self.rows for e in r)

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return "PolyMatrix([" + ", ".join("[" + ", ".join(str(e) for e in r) + "]" for r in self.rows) + "])"

    def to_literal(self) -> list[list[list[dict]]]:
        return [[e.to_literal() for e in r] for r in self.rows]

    @classmethod
    def from_literal(cls, lit) -> "PolyMatrix":
        return cls([[MPoly.from_literal(e) for e in r] for r in lit])


def hermite_form(M: PolyMatrix, v: str = "partial") -> tuple[PolyMatrix, PolyMatrix]:
    """Row Hermite form over ℚ[v]: returns (H, U) with U·M = H.

    H is in row echelon form with monic pivots, entries above each pivot reduced
    modulo the pivot, zero rows last; U is unimodular.
    """
    n, m = M.shape
    A = [[e.uni_coeffs(v) for e in r] for r in M.rows]
    U = [[[Fraction(1)] if i == j else [] for j in range(n)] for i in range(n)]

    def sub_row(i: int, p: int, q: list) -> None:
        # row_i -= q · row_p
        A[i] = [_usub(A[i][c], _umul(q, A[p][c])) for c in range(m)]
        U[i] = [_usub(U[i][c], _umul(q, U[p][c])) for c in range(n)]

    r = 0
    for col in range(m):
        if r == n:
            break
        while True:
            live = [i for i in range(r, n) if A[i][col]]
            if not live:
                break
            p = min(live, key=lambda i: len(A[i][col]))
            others = [i for i in live if i != p]
            if not others:
                break
            for i in others:
                q, _ = _udivmod(A[i][col], A[p][col])
                sub_row(i, p, q)
        if not any(A[i][col] for i in range(r, n)):
            continue
        p = next(i for i in range(r, n) if A[i][col])
        A[r], A[p] = A[p], A[r]
        U[r], U[p] = U[p], U[r]
        lc = A[r][col][-1]
        if lc != 1:
            A[r] = [_uscale(e, 1 / lc) for e in A[r]]
            U[r] = [_uscale(e, 1 / lc) for e in U[r]]
        for i in range(r):
            if A[i][col]:
                q, _ = _udivmod(A[i][col], A[r][col])
                if q:
                    sub_row(i, r, q)
        r += 1
    H = PolyMatrix([[MPoly.from_univariate(e, v) for e in row] for row in A])
    Um = PolyMatrix([[MPoly.from_univariate(e, v) for e in row] for row in U])
    return H, Um
