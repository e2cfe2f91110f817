"""Permutations of {1..n} in one-line notation: w[j-1] == w(j)."""

from __future__ import annotations

from itertools import permutations as _iter_perms

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def longest(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def simple(i: int, n: int) -> Perm:
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def compose(u: Perm, v: Perm) -> Perm:
    """(u v)(j) = u(v(j))."""
    return tuple(u[v[j] - 1] for j in range(len(v)))


def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for j, wj in enumerate(w, start=1):
        out[wj - 1] = j
    return tuple(out)


def length(w: Perm) -> int:
    n = len(w)
    return sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])


def descents(w: Perm) -> list[int]:
    return [i for i in range(1, len(w)) if w[i - 1] > w[i]]


def bruhat_le(u: Perm, w: Perm) -> bool:
    """Tableau criterion for u <= w in Bruhat order."""
    n = len(u)
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            cu = sum(1 for j in range(i) if u[j] >= k)
            cw = sum(1 for j in range(i) if w[j] >= k)
            if cu > cw:
                return False
    return True


def act(w: Perm, mu: tuple[int, ...]) -> tuple[int, ...]:
    """(w.mu)_i = mu_{w^{-1}(i)}, so that w x^mu = x^{w.mu}."""
    out = [0] * len(mu)
    for j, m in enumerate(mu):
        out[w[j] - 1] = m
    return tuple(out)


def all_perms(n: int):
    return (tuple(p) for p in _iter_perms(range(1, n + 1)))
