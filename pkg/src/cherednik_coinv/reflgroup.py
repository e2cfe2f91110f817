"""
The groups G(r,p,n) as colored permutations, their reflections with root
data, and the colored descent combinatorics of G(r,1,n).

A colored permutation v = w zeta_1^k_1 ... zeta_n^k_n is the monomial matrix
sending e_j to zeta^{k_j} e_{w(j)}; its window is [zeta^k_1 w(1), ..., zeta^k_n w(n)].

>>> v = ColoredPermutation((2, 1), (0, 0), r=2)
>>> descent_data(v).steinberg
(0, 2)
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Iterable

from . import perm
from .errors import IncompatibleGroup, InvalidGroup, NotConnected
from .exactfield import CyclotomicNumber, zeta_power
from .polyring import Polynomial

__all__ = [
    "ColoredPermutation",
    "DescentData",
    "Reflection",
    "canonical_representative",
    "chains_witness",
    "class_members",
    "descent_classes",
    "descent_data",
    "enumerate_Gr1np",
    "enumerate_group",
    "enumerate_reflections",
    "group_generators",
    "group_ops",
    "length_genfun",
    "maj_genfun",
    "q_factorial",
    "word_stats",
]


def _check_rpn(r: int, p: int, n: int):
    if r < 1 or p < 1 or n < 1 or r % p:
        raise InvalidGroup(f"G({r},{p},{n}) is not defined (need p | r, n >= 1)")


@dataclass(frozen=True)
class ColoredPermutation:
    w: tuple[int, ...]
    k: tuple[int, ...]
    r: int

    def __post_init__(self):
        object.__setattr__(self, "w", tuple(self.w))
        object.__setattr__(self, "k", tuple(a % self.r for a in self.k))
        if sorted(self.w) != list(range(1, len(self.w) + 1)) or len(self.k) != len(self.w):
            raise ValueError(f"bad colored permutation w={self.w}, k={self.k}")

    @property
    def n(self) -> int:
        return len(self.w)

    @classmethod
    def identity(cls, n: int, r: int) -> ColoredPermutation:
        return cls(perm.identity(n), (0,) * n, r)

    @classmethod
    def simple(cls, i: int, n: int, r: int) -> ColoredPermutation:
        """s_i, swapping coordinates i and i+1."""
        return cls(perm.simple(i, n), (0,) * n, r)

    @classmethod
    def transposition(cls, a: int, b: int, n: int, r: int) -> ColoredPermutation:
        w = list(range(1, n + 1))
        w[a - 1], w[b - 1] = b, a
        return cls(tuple(w), (0,) * n, r)

    @classmethod
    def diagonal(cls, i: int, m: int, n: int, r: int) -> ColoredPermutation:
        """zeta_i^m."""
        k = [0] * n
        k[i - 1] = m
        return cls(perm.identity(n), tuple(k), r)

    def __mul__(self, other: ColoredPermutation) -> ColoredPermutation:
        if not isinstance(other, ColoredPermutation):
            return NotImplemented
        if self.n != other.n or self.r != other.r:
            raise IncompatibleGroup(f"G({self.r},.,{self.n}) vs G({other.r},.,{other.n})")
        w = perm.compose(self.w, other.w)
        k = tuple(other.k[j] + self.k[other.w[j] - 1] for j in range(self.n))
        return ColoredPermutation(w, k, self.r)

    def inverse(self) -> ColoredPermutation:
        winv = perm.inverse(self.w)
        k = [0] * self.n
        for j in range(self.n):
            k[self.w[j] - 1] = -self.k[j]
        return ColoredPermutation(winv, tuple(k), self.r)

    def __pow__(self, e: int) -> ColoredPermutation:
        base = self if e >= 0 else self.inverse()
        out = ColoredPermutation.identity(self.n, self.r)
        for _ in range(abs(e)):
            out = out * base
        return out

    def in_group(self, p: int) -> bool:
        return sum(self.k) % p == 0

    def length(self) -> int:
        return perm.length(self.w)

    def matrix(self) -> list[list[CyclotomicNumber]]:
        n = self.n
        m = [[CyclotomicNumber.rational(self.r, 0)] * n for _ in range(n)]
        for j in range(n):
            m[self.w[j] - 1][j] = zeta_power(self.r, self.k[j])
        return m

    def window(self) -> str:
        return "[" + ", ".join(
            (f"z^{kj} " if kj else "") + str(wj) for wj, kj in zip(self.w, self.k)
        ) + "]"

    def __str__(self) -> str:
        return self.window()

    def to_json(self) -> dict:
        return {"w": list(self.w), "k": list(self.k), "r": self.r}

    @classmethod
    def from_json(cls, obj: dict) -> ColoredPermutation:
        return cls(tuple(obj["w"]), tuple(obj["k"]), int(obj["r"]))


def group_ops(u: ColoredPermutation, v: ColoredPermutation | None, op: str) -> ColoredPermutation:
    if op == "compose":
        return u * v
    if op == "inverse":
        return u.inverse()
    raise ValueError(f"unknown operation {op!r}")


@dataclass(frozen=True)
class Reflection:
    """A reflection of G(r,p,n) with root x_i - zeta^l x_j or x_i.

    `coroot` holds the coefficients on y_1..y_n of the vector alpha^vee with
    x - s.x = <x, alpha^vee> alpha for all x.  `param` is 0 for the order-two
    class (parameter c_0) and m for zeta_i^m (parameter c_m).
    """

    element: ColoredPermutation
    label: tuple
    root: Polynomial
    coroot: tuple[CyclotomicNumber, ...]
    param: int


def enumerate_reflections(r: int, p: int, n: int) -> list[Reflection]:
    _check_rpn(r, p, n)
    out = []
    one = CyclotomicNumber.rational(r, 1)
    zero = CyclotomicNumber.rational(r, 0)
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            s = ColoredPermutation.transposition(a, b, n, r)
            for l in range(r):
                za = ColoredPermutation.diagonal(a, l, n, r)
                elem = za * s * za.inverse()
                root = Polynomial.variable(n, r, a) - Polynomial.variable(n, r, b).scale(
                    zeta_power(r, l))
                coroot = [zero] * n
                coroot[a - 1] = one
                coroot[b - 1] = -zeta_power(r, -l)
                out.append(Reflection(elem, ("order-two",), root, tuple(coroot), 0))
    for a in range(1, n + 1):
        for l in range(1, r // p):
            m = p * l
            coroot = [zero] * n
            coroot[a - 1] = one - zeta_power(r, -m)
            out.append(Reflection(ColoredPermutation.diagonal(a, m, n, r), ("diagonal", l),
                                  Polynomial.variable(n, r, a), tuple(coroot), m))
    return out


def enumerate_group(r: int, p: int, n: int) -> list[ColoredPermutation]:
    """All elements of G(r,p,n)."""
    _check_rpn(r, p, n)
    return [ColoredPermutation(w, k, r)
            for w in perm.all_perms(n)
            for k in product(range(r), repeat=n) if sum(k) % p == 0]


def group_generators(r: int, p: int, n: int) -> list[ColoredPermutation]:
    """s_1..s_{n-1}, zeta_1^p, and zeta_1 zeta_2^{-1}: a generating set of G(r,p,n)."""
    _check_rpn(r, p, n)
    gens = [ColoredPermutation.simple(i, n, r) for i in range(1, n)]
    gens.append(ColoredPermutation.diagonal(1, p, n, r))
    if n >= 2:
        gens.append(ColoredPermutation.diagonal(1, 1, n, r)
                    * ColoredPermutation.diagonal(2, -1, n, r))
    return gens


def enumerate_Gr1np(r: int, p: int, n: int) -> list[ColoredPermutation]:
    """The elements of G(r,1,n) with 0 <= k_n <= r/p - 1."""
    _check_rpn(r, p, n)
    return [ColoredPermutation(w, k, r)
            for w in perm.all_perms(n)
            for k in product(range(r), repeat=n) if k[-1] <= r // p - 1]


@dataclass(frozen=True)
class DescentData:
    v: ColoredPermutation
    descent_set: frozenset[int]
    colors: tuple[int, ...]
    steinberg: tuple[int, ...]

    @property
    def key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """des(v) = (descent set, color vector)."""
        return (tuple(sorted(self.descent_set)), self.colors)


def descents_of(v: ColoredPermutation) -> frozenset[int]:
    w, k = v.w, v.k
    return frozenset(
        i for i in range(1, v.n)
        if k[i - 1] < k[i] or (k[i - 1] == k[i] and w[i - 1] > w[i])
    )


def descent_data(v: ColoredPermutation) -> DescentData:
    des = descents_of(v)
    winv = perm.inverse(v.w)
    lam = tuple(
        v.r * sum(1 for j in des if j >= winv[i - 1]) + v.k[winv[i - 1] - 1]
        for i in range(1, v.n + 1)
    )
    return DescentData(v, des, v.k, lam)


def des(v: ColoredPermutation):
    return (tuple(sorted(descents_of(v))), v.k)


def descent_classes(r: int, p: int, n: int) -> dict[tuple, list[ColoredPermutation]]:
    """G(r,1,n)_p grouped by des(v), in order of first appearance."""
    classes: dict[tuple, list[ColoredPermutation]] = {}
    for v in enumerate_Gr1np(r, p, n):
        classes.setdefault(des(v), []).append(v)
    return classes


def _left_simple(i: int, v: ColoredPermutation) -> ColoredPermutation:
    # s_i v: swap the values i and i+1 in the window, colors stay put
    w = tuple(i + 1 if x == i else i if x == i + 1 else x for x in v.w)
    return ColoredPermutation(w, v.k, v.r)


def class_members(v: ColoredPermutation) -> list[ColoredPermutation]:
    """The descent class of v reached by des-preserving simple transpositions."""
    key = des(v)
    seen = {v}
    queue = deque([v])
    order = [v]
    while queue:
        u = queue.popleft()
        for i in range(1, v.n):
            t = _left_simple(i, u)
            if t not in seen and des(t) == key:
                seen.add(t)
                order.append(t)
                queue.append(t)
    return order


def chains_witness(v: ColoredPermutation, v2: ColoredPermutation) -> list[int]:
    """Indices i_1..i_q with v2 = s_{i_q} ... s_{i_1} v, each prefix in des(v).

    Breadth-first search over the descent class; raises NotConnected if v2 is
    not reached.
    """
    key = des(v)
    if des(v2) != key:
        raise ValueError(f"{v} and {v2} lie in different descent classes")
    parent: dict[ColoredPermutation, tuple] = {v: None}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        if u == v2:
            break
        for i in range(1, v.n):
            t = _left_simple(i, u)
            if t not in parent and des(t) == key:
                parent[t] = (u, i)
                queue.append(t)
    if v2 not in parent:
        raise NotConnected(f"no des-preserving chain from {v} to {v2}")
    path = []
    node = v2
    while parent[node] is not None:
        node, i = parent[node]
        path.append(i)
    return path[::-1]


def canonical_representative(v: ColoredPermutation) -> ColoredPermutation:
    """The element of minimal length(w) in the descent class of v."""
    members = class_members(v)
    best = min(m.length() for m in members)
    minimal = [m for m in members if m.length() == best]
    if len(minimal) != 1:
        raise ValueError(f"descent class of {v} has {len(minimal)} minimal-length elements")
    return minimal[0]


def word_stats(w: Iterable[int]) -> tuple[int, int]:
    """(length, major index) of a permutation."""
    w = tuple(w)
    return perm.length(w), sum(perm.descents(w))


def _genfun(values: Iterable[int]) -> list[int]:
    values = list(values)
    out = [0] * (max(values) + 1)
    for v in values:
        out[v] += 1
    return out


def length_genfun(n: int) -> list[int]:
    return _genfun(word_stats(w)[0] for w in perm.all_perms(n))


def maj_genfun(n: int) -> list[int]:
    return _genfun(word_stats(w)[1] for w in perm.all_perms(n))


def q_factorial(n: int) -> list[int]:
    """Coefficients of prod_{i=1}^n (1 - t^i)/(1 - t)."""
    out = [1]
    for i in range(1, n + 1):
        nxt = [0] * (len(out) + i - 1)
        for a, c in enumerate(out):
            for b in range(i):
                nxt[a + b] += c
        out = nxt
    return out
