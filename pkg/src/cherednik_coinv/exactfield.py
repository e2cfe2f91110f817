"""
Exact arithmetic in the cyclotomic field Q(zeta_r).

Elements are stored in the power basis 1, zeta, ..., zeta^(phi(r)-1) modulo
the r-th cyclotomic polynomial, as a tuple of integer numerators over one
positive common denominator.  Equality is therefore a plain comparison of the
normalized data.

>>> z = zeta(4)
>>> z * z
CyclotomicNumber(4, [-1, 0])
>>> 1 / zeta(3) == zeta(3) ** 2
True
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational
from typing import Iterable

from .errors import DivisionByZero, IncompatibleField, InvalidGroup

__all__ = [
    "CyclotomicNumber",
    "ParameterSet",
    "cyclotomic_polynomial",
    "cyclo_arith",
    "d_param",
    "euler_phi",
    "parse_rational",
    "rational_str",
    "zeta",
    "zeta_power",
]


def _divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


def _int_poly_divexact(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Divide integer polynomials (low-to-high) where `den` is monic."""
    num = list(num)
    dn = len(den) - 1
    quot = [0] * (len(num) - dn)
    for i in range(len(quot) - 1, -1, -1):
        q = num[i + dn]
        quot[i] = q
        if q:
            for j, c in enumerate(den):
                num[i + j] -= q * c
    if any(num[:dn]):
        raise ArithmeticError("cyclotomic division left a remainder")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(r: int) -> tuple[int, ...]:
    """Coefficients (constant term first) of the r-th cyclotomic polynomial.

    Computed by dividing x^r - 1 by the cyclotomic polynomials of the proper
    divisors of r.

    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    """
    if r < 1:
        raise ValueError(f"cyclotomic order must be positive, got {r}")
    poly = [-1] + [0] * (r - 1) + [1]
    for d in _divisors(r)[:-1]:
        poly = _int_poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def euler_phi(r: int) -> int:
    return len(cyclotomic_polynomial(r)) - 1


@lru_cache(maxsize=None)
def _reduction_table(r: int) -> tuple[tuple[int, ...], ...]:
    # row m = power-basis coordinates of zeta^m, for 0 <= m <= 2*phi - 2
    cyc = cyclotomic_polynomial(r)
    deg = len(cyc) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(max(2 * deg - 1, 1)):
        rows.append(tuple(cur))
        # multiply by zeta, then substitute zeta^deg = -(lower terms of cyc)
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [a - top * c for a, c in zip(cur, cyc[:-1])]
    return tuple(rows)


def _normalize(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num = [-a for a in num]
        den = -den
    g = den
    for a in num:
        g = gcd(g, a)
        if g == 1:
            break
    if not any(num):
        return tuple(0 for _ in num), 1
    if g > 1:
        num = [a // g for a in num]
        den //= g
    return tuple(num), den


class CyclotomicNumber:
    """An element of Q(zeta_r), immutable.

    Plain ints and Fractions are promoted on either side of an operator.
    """

    __slots__ = ("r", "_num", "_den")

    def __init__(self, r: int, coeffs: Iterable = (0,)):
        deg = euler_phi(r)
        fr = [Fraction(c) for c in coeffs]
        if len(fr) > deg:
            raise ValueError(f"expected at most {deg} coefficients for r={r}")
        fr += [Fraction(0)] * (deg - len(fr))
        den = 1
        for c in fr:
            den = den * c.denominator // gcd(den, c.denominator)
        num = [c.numerator * (den // c.denominator) for c in fr]
        self.r = r
        self._num, self._den = _normalize(num, den)

    @classmethod
    def _raw(cls, r: int, num: list[int], den: int) -> CyclotomicNumber:
        obj = object.__new__(cls)
        obj.r = r
        obj._num, obj._den = _normalize(num, den)
        return obj

    @classmethod
    def rational(cls, r: int, q) -> CyclotomicNumber:
        q = Fraction(q)
        num = [0] * euler_phi(r)
        num[0] = q.numerator
        return cls._raw(r, num, q.denominator)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, self._den) for a in self._num)

    def is_zero(self) -> bool:
        return not any(self._num)

    def __bool__(self) -> bool:
        return any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    def _coerce(self, other) -> CyclotomicNumber:
        if isinstance(other, CyclotomicNumber):
            if other.r != self.r:
                raise IncompatibleField(f"Q(zeta_{self.r}) vs Q(zeta_{other.r})")
            return other
        if isinstance(other, (int, Rational)):
            return CyclotomicNumber.rational(self.r, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d1, d2 = self._den, other._den
        if d1 == d2:
            return CyclotomicNumber._raw(self.r, [a + b for a, b in zip(self._num, other._num)], d1)
        return CyclotomicNumber._raw(
            self.r, [a * d2 + b * d1 for a, b in zip(self._num, other._num)], d1 * d2
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber._raw(self.r, [-a for a in self._num], self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._num, other._num
        deg = len(a)
        if deg == 1:
            return CyclotomicNumber._raw(self.r, [a[0] * b[0]], self._den * other._den)
        conv = [0] * (2 * deg - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        table = _reduction_table(self.r)
        out = conv[:deg]
        for m in range(deg, 2 * deg - 1):
            c = conv[m]
            if c:
                row = table[m]
                for t in range(deg):
                    out[t] += c * row[t]
        return CyclotomicNumber._raw(self.r, out, self._den * other._den)

    __rmul__ = __mul__

    def inverse(self) -> CyclotomicNumber:
        """Multiplicative inverse via the extended Euclidean algorithm against Phi_r."""
        if self.is_zero():
            raise DivisionByZero("division by zero in Q(zeta_%d)" % self.r)
        if len(self._num) == 1:
            return CyclotomicNumber._raw(self.r, [self._den], self._num[0])
        u = _poly_inverse_mod([Fraction(c) for c in self.coeffs],
                              [Fraction(c) for c in cyclotomic_polynomial(self.r)])
        return CyclotomicNumber(self.r, u)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = CyclotomicNumber.rational(self.r, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, CyclotomicNumber):
            return self.r == other.r and self._num == other._num and self._den == other._den
        if isinstance(other, (int, Rational)):
            q = Fraction(other)
            return (self.is_rational() and self._num[0] == q.numerator
                    and self._den == q.denominator)
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(Fraction(self._num[0], self._den))
        return hash((self.r, self._num, self._den))

    def __repr__(self) -> str:
        return f"CyclotomicNumber({self.r}, [{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self) -> str:
        parts = []
        for m, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if m == 0 else ("z" if m == 1 else f"z^{m}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"

    def to_json(self) -> dict:
        return {"r": self.r, "coeffs": [rational_str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> CyclotomicNumber:
        return cls(int(obj["r"]), [parse_rational(c) for c in obj["coeffs"]])


def _poly_trim(a: list[Fraction]) -> list[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = _poly_trim(list(a))
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] / b[-1]
        q[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] -= c * bc
        a = _poly_trim(a)
    return q, a


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _poly_trim([x - y for x, y in zip(a, b)])


def _poly_inverse_mod(a: list[Fraction], m: list[Fraction]) -> list[Fraction]:
    # invariant: s_i * a == r_i (mod m)
    r0, r1 = _poly_trim(list(m)), _poly_trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, rem = _poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    if not r1:
        raise DivisionByZero("element is not invertible modulo the cyclotomic polynomial")
    c = r1[0]
    _, s1 = _poly_divmod([x / c for x in s1], m)
    return s1


def cyclo_arith(a: CyclotomicNumber, b: CyclotomicNumber, op: str) -> CyclotomicNumber:
    """Binary field operation named by `op` in {add, sub, mul, div}."""
    if a.r != b.r:
        raise IncompatibleField(f"Q(zeta_{a.r}) vs Q(zeta_{b.r})")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


@lru_cache(maxsize=None)
def zeta_power(r: int, m: int) -> CyclotomicNumber:
    """zeta_r ** m for any integer m."""
    m %= r
    if m == 0:
        return CyclotomicNumber.rational(r, 1)
    if m == 1:
        cyc = cyclotomic_polynomial(r)
        if len(cyc) == 2:
            # degree one: zeta is the rational root of x + cyc[0]
            return CyclotomicNumber.rational(r, -cyc[0])
        return CyclotomicNumber._raw(r, [0, 1] + [0] * (len(cyc) - 3), 1)
    return zeta_power(r, m - 1) * zeta_power(r, 1)


def zeta(r: int) -> CyclotomicNumber:
    return zeta_power(r, 1)


def root_of_unity_exponent(c: CyclotomicNumber) -> int | None:
    """Return m in [0, r) with zeta^m == c, or None."""
    for m in range(c.r):
        if zeta_power(c.r, m) == c:
            return m
    return None


def rational_str(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text) -> Fraction:
    """Parse "num/den" or an integer string.  Floats are rejected."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    s = str(text).strip()
    if any(ch in s for ch in ".eE") or not s:
        raise ValueError(f"not an exact rational: {text!r}")
    if "/" in s:
        num, den = s.split("/", 1)
        if int(den) == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


@dataclass(frozen=True)
class ParameterSet:
    """Specialized values of kappa, c_0 and c_{lp} for G(r,p,n).

    `c` maps each multiple m = lp of p with 0 < m < r to c_m.  The values
    d_j = sum_l c_{lp} zeta^{lpj} are cached on construction.
    """

    r: int
    p: int
    kappa: Fraction = Fraction(0)
    c0: Fraction = Fraction(1, 3)
    c: tuple[tuple[int, Fraction], ...] = ()
    d: tuple[CyclotomicNumber, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.r < 1 or self.p < 1 or self.r % self.p:
            raise InvalidGroup(f"p={self.p} must divide r={self.r}")
        object.__setattr__(self, "kappa", Fraction(self.kappa))
        object.__setattr__(self, "c0", Fraction(self.c0))
        cdict = dict(self.c)
        expected = set(range(self.p, self.r, self.p))
        if set(cdict) != expected:
            raise ValueError(
                f"c must be given exactly on multiples of p below r: {sorted(expected)}, "
                f"got {sorted(cdict)}"
            )
        object.__setattr__(self, "c", tuple(sorted((m, Fraction(v)) for m, v in cdict.items())))
        ds = []
        for j in range(self.r):
            total = CyclotomicNumber.rational(self.r, 0)
            for m, cm in self.c:
                total = total + zeta_power(self.r, m * j) * cm
            ds.append(total)
        object.__setattr__(self, "d", tuple(ds))

    @classmethod
    def default(cls, r: int, p: int, kappa=0, c0=None, c: dict | None = None) -> ParameterSet:
        """c_0 = 1/3 and c_{lp} = 1/(3+l) unless overridden."""
        if r < 1 or p < 1 or r % p:
            raise InvalidGroup(f"p={p} must divide r={r}")
        cvals = {l * p: Fraction(1, 3 + l) for l in range(1, r // p)}
        if c:
            for m, v in c.items():
                if m not in cvals:
                    raise ValueError(f"c_{m} is not a parameter of G({r},{p},n)")
                cvals[m] = Fraction(v)
        return cls(r, p, Fraction(kappa), Fraction(1, 3) if c0 is None else Fraction(c0),
                   tuple(cvals.items()))

    def with_kappa(self, kappa) -> ParameterSet:
        return ParameterSet(self.r, self.p, Fraction(kappa), self.c0, self.c)

    @property
    def cdict(self) -> dict[int, Fraction]:
        return dict(self.c)

    def c_value(self, m: int) -> Fraction:
        """c_m for 0 <= m < r, zero when p does not divide m."""
        m %= self.r
        if m == 0:
            return self.c0
        return self.cdict.get(m, Fraction(0))

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "p": self.p,
            "kappa": rational_str(self.kappa),
            "c0": rational_str(self.c0),
            "c": {str(m): rational_str(v) for m, v in self.c},
        }

    @classmethod
    def from_json(cls, obj) -> ParameterSet:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(int(obj["r"]), int(obj["p"]), parse_rational(obj["kappa"]),
                   parse_rational(obj["c0"]),
                   tuple((int(m), parse_rational(v)) for m, v in obj.get("c", {}).items()))


def d_param(params: ParameterSet, j: int) -> CyclotomicNumber:
    return params.d[j % params.r]
