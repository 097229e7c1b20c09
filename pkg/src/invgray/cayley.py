"""Reflections t_{i,j}, the connecting sets T^A, T^B, T^D, and edge checks.

Every reflection is realized by multiplying out its defining word of simple
generators, so the sets below are sets of concrete signed permutations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .core import CodeList, Word, compose, compose_all, identity, inverse
from .recursive_codes import ValidationReport, Violation, coverage_violations


def simple_generator(kind: str, i: int, n: int) -> Word:
    """``s_i`` of the given type as a rank-``n`` word."""
    if not 1 <= i <= n:
        raise ValueError(f"generator index {i} out of range 1..{n}")
    w = list(range(1, n + 1))
    if i < n:
        w[i - 1], w[i] = i + 1, i
    elif kind == "B":
        w[n - 1] = -n
    elif kind == "D":
        if n < 2:
            raise ValueError("s_n^D needs n >= 2")
        w[n - 2], w[n - 1] = -n, -(n - 1)
    else:
        raise ValueError(f"type {kind} has no generator s_{n}")
    return tuple(w)


def reflection(kind: str, i: int, j: int, n: int) -> Word:
    """Realize ``t_{i,j}`` as a signed permutation.

    Type A and B use ``s_i ... s_{j-1} s_j s_{j-1} ... s_i`` (``s_i`` when
    ``i == j``).  In type D this word is used for ``j < n``; ``t_{n-1,n}`` is
    ``s_{n-1} s_n`` and ``t_{i,n}`` conjugates it by ``s_i ... s_{n-2}``.
    """
    top = n - 1 if kind == "A" else n
    if kind not in ("A", "B", "D"):
        raise ValueError(f"unknown group type {kind!r}")
    if not (1 <= i <= j <= top) or (kind == "D" and i == n):
        raise ValueError(f"t_{{{i},{j}}} undefined for type {kind}, n={n}")
    s = [None] + [simple_generator(kind, k, n) for k in range(1, top + 1)]
    if kind == "D" and j == n:
        middle = [s[n - 1], s[n]]
        j = n - 1
    else:
        middle = [s[j]]
    left = [s[k] for k in range(i, j)]
    return compose_all(*left, *middle, *reversed(left)) if left or middle else identity(n)


@dataclass(frozen=True)
class GeneratorSet:
    """Labeled subsets ``X_1 ... X_4`` of a connecting set, with edge lookup."""

    kind: str
    n: int
    subsets: dict[str, frozenset[Word]]

    @property
    def elements(self) -> frozenset[Word]:
        out: set[Word] = set()
        for s in self.subsets.values():
            out |= s
        return frozenset(out)

    def label_of(self, g: Sequence[int]) -> list[str]:
        g = tuple(g)
        return [name for name, s in self.subsets.items() if g in s]

    def __contains__(self, g) -> bool:
        return tuple(g) in self.elements

    def union(self, *names: str) -> frozenset[Word]:
        out: set[Word] = set()
        for name in names:
            out |= self.subsets[name]
        return frozenset(out)

    def is_inverse_closed(self) -> bool:
        els = self.elements
        return all(inverse(g) in els for g in els)


def _transposition(i: int, j: int, n: int, barred: bool = False) -> Word:
    w = list(range(1, n + 1))
    sgn = -1 if barred else 1
    w[i - 1], w[j - 1] = sgn * j, sgn * i
    return tuple(w)


def _barred_products(n: int) -> set[Word]:
    """Barred transpositions, and products of a transposition with a barred
    transposition sharing one letter (3-cycles carrying two bars)."""
    out = {_transposition(i, j, n, True) for i in range(1, n + 1) for j in range(i + 1, n + 1)}
    for a, b, c in permutations(range(1, n + 1), 3):
        x, y = _transposition(a, b, n), _transposition(b, c, n, True)
        out |= {compose(x, y), compose(y, x)}
    return out


def generating_set(kind: str, n: int, printed_only: bool = False) -> GeneratorSet:
    """The connecting set ``T`` of the given type, split into labeled subsets.

    ``X1``..``X4`` follow the listed families (closed under inverses, with
    ``t_{n,n}`` read as the identity in type D).  Types B and D also get
    ``X5``: barred transpositions and 3-cycles with two bars, products of two
    reflections that the recursive codes use at block seams.  Pass
    ``printed_only=True`` to leave it out.
    """
    def t(i: int, j: int) -> Word:
        if kind == "D" and i == j == n:
            return identity(n)
        return reflection(kind, i, j, n)

    idn = identity(n)
    X: dict[str, set[Word]] = {}
    if kind == "A":
        X["X1"] = {t(i, j) for i in range(1, n) for j in range(i, n)}
        X["X2"] = set()
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                for k in range(j + 1, n + 1):
                    a, b = t(i, j - 1), t(j, k - 1)
                    X["X2"] |= {compose(a, b), compose(b, a)}
    elif kind == "B":
        X["X1"] = {t(i, j) for i in range(1, n + 1) for j in range(i, n + 1)}
        X["X2"] = {compose(t(i, n), t(j, n)) for i in range(1, n) for j in range(i + 1, n + 1)}
        X["X3"] = {compose(t(i, j), t(j + 1, n)) for i in range(1, n) for j in range(i, n)}
        X["X4"] = {compose(t(j, k - 1), t(i, j - 1))
                   for i in range(1, n + 1) for j in range(i + 1, n + 1)
                   for k in range(j + 1, n + 1)}
    elif kind == "D":
        X["X1"] = {t(i, j) for i in range(1, n) for j in range(i, n + 1)}
        X["X2"] = {compose(t(i, n), t(j, n)) for i in range(1, n) for j in range(i + 1, n)}
        X["X3"] = {compose_all(t(i, j), t(j + 1, n), t(k, n))
                   for i in range(1, n) for j in range(i, n - 1)
                   for k in range(j + 2, n + 1)}
        X["X4"] = set()
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                for k in range(j + 1, n + 1):
                    rot = compose(t(j, k - 1), t(i, j - 1))
                    X["X4"].add(rot)
                    X["X4"].add(compose_all(rot, t(i, n), t(j, n)))
                    X["X4"].add(compose_all(rot, t(i, n), t(k, n)))
    else:
        raise ValueError(f"unknown group type {kind!r}")
    for name in X:
        X[name] |= {inverse(g) for g in X[name]}
    if kind in ("B", "D") and not printed_only:
        X["X5"] = _barred_products(n)
    return GeneratorSet(kind, n, {name: frozenset(s - {idn}) for name, s in X.items()})


def is_edge(u: Sequence[int], v: Sequence[int], T: GeneratorSet | frozenset) -> bool:
    if len(u) != len(v):
        raise ValueError(f"rank mismatch: {len(u)} != {len(v)}")
    if tuple(u) == tuple(v):
        return False
    els = T.elements if isinstance(T, GeneratorSet) else T
    return compose(inverse(u), v) in els


def verify_hamilton_cycle(code: CodeList, T: GeneratorSet) -> ValidationReport:
    words = list(code.words)
    report = ValidationReport(coverage_violations(code.kind, code.n, words))
    els = T.elements
    for idx in range(len(words) if len(words) > 1 else 0):
        u, v = words[idx], words[(idx + 1) % len(words)]
        if len(u) == len(v) == T.n and not is_edge(u, v, els):
            report.violations.append(Violation("edge", idx, (u, v)))
    return report
