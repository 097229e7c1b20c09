"""Involution counts from the three recursions, plus brute-force enumeration."""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .core import CodeList, Word, negatives

# Largest rank `enumerate_involutions` accepts by default; each finishes well
# under a second at these sizes.
ENUMERATION_CAP = {"A": 8, "B": 7, "D": 7}


@lru_cache(maxsize=None)
def _count_a(n: int) -> int:
    if n <= 1:
        return 1
    return _count_a(n - 1) + (n - 1) * _count_a(n - 2)


@lru_cache(maxsize=None)
def _count_b(n: int) -> int:
    if n == 0:
        return 1
    if n == 1:
        return 2
    return 2 * _count_b(n - 1) + 2 * (n - 1) * _count_b(n - 2)


@lru_cache(maxsize=None)
def _count_d(n: int) -> int:
    if n == 1:
        return 1
    if n == 2:
        return 4
    return _count_b(n - 1) + 2 * (n - 1) * _count_d(n - 2)


def count(kind: str, n: int) -> int:
    """Number of involutions of rank ``n`` in the Weyl group of type ``kind``.

    >>> [count("D", n) for n in range(1, 6)]
    [1, 4, 10, 44, 156]
    """
    if kind in ("A", "B"):
        if n < 0:
            raise ValueError(f"rank must be >= 0 for type {kind}, got {n}")
        # iterate upward so deep ranks never hit the recursion limit
        fn = _count_a if kind == "A" else _count_b
        for m in range(n):
            fn(m)
        return fn(n)
    if kind == "D":
        if n < 1:
            raise ValueError(f"rank must be >= 1 for type D, got {n}")
        for m in range(1, n):
            _count_b(m)
            _count_d(m)
        return _count_d(n)
    raise ValueError(f"unknown group type {kind!r}")


def _unsigned_involutions(n: int) -> list[Word]:
    """All involutions of S_n, built by pairing off the smallest free letter."""
    out: list[Word] = []
    w = [0] * n

    def rec(free: list[int]) -> None:
        if not free:
            out.append(tuple(w))
            return
        a, rest = free[0], free[1:]
        w[a - 1] = a
        rec(rest)
        for k, b in enumerate(rest):
            w[a - 1], w[b - 1] = b, a
            rec(rest[:k] + rest[k + 1:])
            w[b - 1] = 0
        w[a - 1] = 0

    rec(list(range(1, n + 1)))
    return out


def enumerate_involutions(kind: str, n: int, cap: int | None = None) -> CodeList:
    """Every involution of the given type and rank, sorted lexicographically."""
    if kind not in ENUMERATION_CAP:
        raise ValueError(f"unknown group type {kind!r}")
    limit = ENUMERATION_CAP[kind] if cap is None else cap
    if n > limit:
        raise ValueError(f"rank {n} exceeds enumeration cap {limit} for type {kind}")
    if n < (1 if kind == "D" else 0):
        raise ValueError(f"rank {n} out of range for type {kind}")
    words: list[Word] = []
    for p in _unsigned_involutions(n):
        if kind == "A":
            words.append(p)
            continue
        # one sign per cycle: fixed points and transpositions
        reps = [i for i, x in enumerate(p, start=1) if x >= i]
        for signs in product((1, -1), repeat=len(reps)):
            s = [1] * n
            for i, sg in zip(reps, signs):
                s[i - 1] = s[p[i - 1] - 1] = sg
            w = tuple(sg * x for sg, x in zip(s, p))
            if kind == "D" and negatives(w) % 2:
                continue
            words.append(w)
    words.sort()
    return CodeList(kind, n, tuple(words))


def even_odd_excess(n: int, cap: int | None = None) -> int:
    """(even involutions of S_n) - (odd involutions of S_n), by enumeration."""
    total = 0
    for p in enumerate_involutions("A", n, cap):
        k = sum(1 for i, x in enumerate(p, start=1) if x > i)
        total += 1 if k % 2 == 0 else -1
    return total
