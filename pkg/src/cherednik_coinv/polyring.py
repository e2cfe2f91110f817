"""
Sparse polynomials in x_1..x_n over Q(zeta_r), the monomial action of
G(r,1,n), and the multi-index combinatorics used for triangularity.

>>> x1, x2 = Polynomial.variable(2, 1, 1), Polynomial.variable(2, 1, 2)
>>> (x1 + x2) * (x1 - x2)
Polynomial(n=2, r=1, x1^2 - x2^2)
"""

from __future__ import annotations

from dataclasses import dataclass
from numbers import Rational
from typing import Iterable, Iterator, Mapping

from . import perm
from .errors import DegreeMismatch, IncompatibleRing, NotDivisible
from .exactfield import CyclotomicNumber, parse_rational, zeta_power

__all__ = [
    "Polynomial",
    "SortData",
    "compositions",
    "exact_divide_linear",
    "group_action",
    "order_key",
    "order_less",
    "poly_arith",
    "sort_data",
]

Exps = tuple[int, ...]


class Polynomial:
    """Immutable sparse polynomial; `terms` never stores a zero coefficient."""

    __slots__ = ("n", "r", "terms")

    def __init__(self, n: int, r: int, terms: Mapping[Exps, object] | None = None):
        self.n = n
        self.r = r
        clean: dict[Exps, CyclotomicNumber] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != n:
                    raise IncompatibleRing(f"exponent {e} has wrong length for n={n}")
                if not isinstance(c, CyclotomicNumber):
                    c = CyclotomicNumber.rational(r, c)
                elif c.r != r:
                    raise IncompatibleRing(f"coefficient in Q(zeta_{c.r}), ring has r={r}")
                if c:
                    clean[tuple(e)] = c
        self.terms = clean

    @classmethod
    def _wrap(cls, n: int, r: int, terms: dict) -> Polynomial:
        obj = object.__new__(cls)
        obj.n, obj.r, obj.terms = n, r, terms
        return obj

    @classmethod
    def zero(cls, n: int, r: int) -> Polynomial:
        return cls._wrap(n, r, {})

    @classmethod
    def constant(cls, n: int, r: int, c=1) -> Polynomial:
        return cls(n, r, {(0,) * n: c})

    @classmethod
    def monomial(cls, r: int, exps: Iterable[int], coeff=1) -> Polynomial:
        exps = tuple(exps)
        return cls(len(exps), r, {exps: coeff})

    @classmethod
    def variable(cls, n: int, r: int, i: int) -> Polynomial:
        """x_i, 1-based."""
        e = [0] * n
        e[i - 1] = 1
        return cls._wrap(n, r, {tuple(e): CyclotomicNumber.rational(r, 1)})

    def _check(self, other: Polynomial):
        if self.n != other.n or self.r != other.r:
            raise IncompatibleRing(f"(n={self.n}, r={self.r}) vs (n={other.n}, r={other.r})")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Exps, CyclotomicNumber]]:
        return iter(self.terms.items())

    def coefficient(self, exps: Iterable[int]) -> CyclotomicNumber:
        return self.terms.get(tuple(exps), CyclotomicNumber.rational(self.r, 0))

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def homogeneous_part(self, d: int) -> Polynomial:
        return Polynomial._wrap(self.n, self.r,
                                {e: c for e, c in self.terms.items() if sum(e) == d})

    def add_scaled(self, other: Polynomial, scale) -> Polynomial:
        """self + scale * other."""
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            v = c * scale if v is None else v + c * scale
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._wrap(self.n, self.r, out)

    def __add__(self, other):
        if isinstance(other, Polynomial):
            return self.add_scaled(other, 1)
        if isinstance(other, (int, Rational, CyclotomicNumber)):
            return self + Polynomial.constant(self.n, self.r, other)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._wrap(self.n, self.r, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, Polynomial):
            return self.add_scaled(other, -1)
        if isinstance(other, (int, Rational, CyclotomicNumber)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, s) -> Polynomial:
        if isinstance(s, CyclotomicNumber) and s.r != self.r:
            raise IncompatibleRing(f"scalar in Q(zeta_{s.r}), ring has r={self.r}")
        if not s:
            return Polynomial.zero(self.n, self.r)
        return Polynomial._wrap(self.n, self.r, {e: c * s for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            out: dict[Exps, CyclotomicNumber] = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    v = out.get(e)
                    out[e] = c1 * c2 if v is None else v + c1 * c2
            return Polynomial._wrap(self.n, self.r, {e: c for e, c in out.items() if c})
        if isinstance(other, (int, Rational, CyclotomicNumber)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        out = Polynomial.constant(self.n, self.r, 1)
        for _ in range(e):
            out = out * self
        return out

    def mul_monomial(self, exps: Exps) -> Polynomial:
        return Polynomial._wrap(
            self.n, self.r,
            {tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()},
        )

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.n == other.n and self.r == other.r and self.terms == other.terms
        if isinstance(other, (int, Rational, CyclotomicNumber)):
            return self == Polynomial.constant(self.n, self.r, other)
        return NotImplemented

    __hash__ = None

    def sorted_terms(self) -> list[tuple[Exps, CyclotomicNumber]]:
        return sorted(self.terms.items(), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"x{i + 1}" if a == 1 else f"x{i + 1}^{a}" for i, a in enumerate(e) if a
            )
            cs = str(c)
            if not mono:
                parts.append(cs)
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            elif c.is_rational():
                parts.append(f"{cs}*{mono}")
            else:
                parts.append(f"({cs})*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Polynomial(n={self.n}, r={self.r}, {self})"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "terms": [{"exps": list(e), "coeff": c.to_json()}
                      for e, c in sorted(self.terms.items())],
        }

    @classmethod
    def from_json(cls, obj: dict) -> Polynomial:
        r = int(obj["r"])
        terms = {}
        for t in obj["terms"]:
            c = t["coeff"]
            if isinstance(c, dict):
                c = CyclotomicNumber.from_json(c)
            else:
                c = CyclotomicNumber.rational(r, parse_rational(c))
            terms[tuple(int(a) for a in t["exps"])] = c
        return cls(int(obj["n"]), r, terms)


def poly_arith(f: Polynomial, g, op: str) -> Polynomial:
    """op in {add, sub, mul, scale}; for scale, `g` is a scalar."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        if not isinstance(g, Polynomial):
            raise TypeError("mul expects a Polynomial; use scale for scalars")
        return f * g
    if op == "scale":
        return f.scale(g)
    raise ValueError(f"unknown operation {op!r}")


def exact_divide_linear(f: Polynomial, lin: Polynomial) -> Polynomial:
    """Quotient q with q * lin == f, for a nonzero linear form `lin`.

    Division is synthetic in the first variable occurring in `lin`; a nonzero
    remainder raises NotDivisible.
    """
    f._check(lin)
    if not lin or any(sum(e) != 1 for e in lin.terms):
        raise ValueError(f"not a nonzero linear form: {lin}")
    n = f.n
    lead = min(e.index(1) for e in lin.terms)
    lead_e = tuple(1 if i == lead else 0 for i in range(n))
    inv_lead = lin.terms[lead_e].inverse()
    others = [(e.index(1), c) for e, c in lin.terms.items() if e != lead_e]

    rem = dict(f.terms)
    quot: dict[Exps, CyclotomicNumber] = {}
    top = max((e[lead] for e in rem), default=0)
    for level in range(top, 0, -1):
        for e in [e for e in rem if e[lead] == level]:
            c = rem.pop(e)
            qe = tuple(a - 1 if i == lead else a for i, a in enumerate(e))
            qc = c * inv_lead
            quot[qe] = quot.get(qe, 0) + qc
            for j, lc in others:
                te = tuple(a + 1 if i == j else a for i, a in enumerate(qe))
                v = rem.get(te)
                v = -(qc * lc) if v is None else v - qc * lc
                if v:
                    rem[te] = v
                else:
                    rem.pop(te, None)
    if rem:
        raise NotDivisible(f"{f} is not divisible by {lin}")
    return Polynomial(n, f.r, quot)


def act_on_monomial(w: tuple[int, ...], k: tuple[int, ...], r: int,
                    exps: Exps) -> tuple[Exps, CyclotomicNumber]:
    """v.x^mu for v = w zeta_1^k_1 ... zeta_n^k_n, using v.x_j = zeta^{-k_j} x_{w(j)}."""
    new = [0] * len(exps)
    power = 0
    for j, a in enumerate(exps):
        new[w[j] - 1] = a
        power -= k[j] * a
    return tuple(new), zeta_power(r, power)


def group_action(v, f: Polynomial) -> Polynomial:
    """Apply a colored permutation (anything with .w, .k, .r) to f."""
    if len(v.w) != f.n or v.r != f.r:
        raise IncompatibleRing(f"group element for (n={len(v.w)}, r={v.r}) on (n={f.n}, r={f.r})")
    out = {}
    for e, c in f.terms.items():
        ne, s = act_on_monomial(v.w, v.k, v.r, e)
        out[ne] = c * s
    return Polynomial._wrap(f.n, f.r, out)


def compositions(d: int, n: int) -> list[Exps]:
    """All mu in Z_{>=0}^n with |mu| = d, lexicographically decreasing."""
    if n == 0:
        return [()] if d == 0 else []
    if n == 1:
        return [(d,)]
    return [(a,) + rest for a in range(d, -1, -1) for rest in compositions(d - a, n - 1)]


@dataclass(frozen=True)
class SortData:
    """w_mu: shortest w with w^{-1}.mu a partition; v_mu = w_0 w_mu^{-1}."""

    mu: Exps
    w_mu: perm.Perm
    v_mu: perm.Perm

    @property
    def partition(self) -> Exps:
        return tuple(sorted(self.mu, reverse=True))


def sort_data(mu: Iterable[int]) -> SortData:
    mu = tuple(mu)
    n = len(mu)
    # w_mu^{-1}(i) is the stable rank of mu_i in decreasing order
    rank = tuple(
        sum(1 for m in mu if m > mu[i]) + sum(1 for j in range(i) if mu[j] == mu[i]) + 1
        for i in range(n)
    )
    w_mu = perm.inverse(rank)
    v_mu = tuple(n + 1 - rk for rk in rank)
    return SortData(mu, w_mu, v_mu)


def _dominated(a: Exps, b: Exps) -> bool:
    """a <= b in dominance order, both partitions of the same size."""
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa > sb:
            return False
    return True


def order_less(nu: Iterable[int], mu: Iterable[int]) -> bool:
    """Strict triangularity order: dominance of the sorted parts, then Bruhat on w.

    nu < mu iff sort(nu) is strictly dominated by sort(mu), or the sorts agree
    and w_nu > w_mu in Bruhat order.
    """
    nu, mu = tuple(nu), tuple(mu)
    if sum(nu) != sum(mu):
        raise DegreeMismatch(f"|{nu}| != |{mu}|")
    if nu == mu:
        return False
    sn, sm = sort_data(nu), sort_data(mu)
    if sn.partition != sm.partition:
        return _dominated(sn.partition, sm.partition)
    return perm.bruhat_le(sm.w_mu, sn.w_mu)


def order_key(mu: Exps) -> tuple:
    """A total-order key whose order extends order_less (larger is higher)."""
    sd = sort_data(mu)
    return (sd.partition, -perm.length(sd.w_mu), mu)

