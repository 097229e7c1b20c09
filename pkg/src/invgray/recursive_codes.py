"""Recursive Gray codes GCA(n), GCB(n), GCD(n) and their property validator.

Each code lists every involution of its type once, starts at the identity,
ends at the transposition ``(n-1 n)`` (possibly barred) and moves between
neighbours by a transposition, a rotation of three letters, or one or two
sign changes.  Blocks are relabeled copies of smaller codes, glued with a
fixed letter ``n`` or a transposition ``(i n)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .core import (
    CodeList,
    MoveClass,
    Word,
    append_transposition,
    classify_move,
    embed,
    extend_fixed,
    extend_tilde,
    from_cycles,
    hamming,
    identity,
    membership,
)
from .counting import enumerate_involutions


def _cycles(n: int, *codes: list[tuple[int, ...]]) -> tuple[Word, ...]:
    return tuple(from_cycles(c, n) for c in codes)


GCA3 = _cycles(3, [], [(1, 2)], [(1, 3)], [(2, 3)])
GCA4 = _cycles(
    4,
    [], [(1, 3)], [(1, 3), (2, 4)], [(2, 4)], [(1, 4)],
    [(1, 4), (2, 3)], [(2, 3)], [(1, 2)], [(1, 2), (3, 4)], [(3, 4)],
)
_GCB2_CYCLES = [[], [(-1,)], [(-1,), (-2,)], [(-2,)], [(-1, -2)], [(1, 2)]]
GCB2 = _cycles(2, *_GCB2_CYCLES)
GCB3 = _cycles(
    3,
    *_GCB2_CYCLES,
    [(1, 2), (-3,)], [(-1, -2), (-3,)], [(-2,), (-3,)], [(-1,), (-2,), (-3,)],
    [(-1,), (-3,)], [(-3,)], [(-1, -3)], [(-1, -3), (-2,)], [(1, 3), (-2,)],
    [(1, 3)], [(2, 3)], [(-1,), (2, 3)], [(-1,), (-2, -3)], [(-2, -3)],
)
GCD1 = ((1,),)
GCD2 = _cycles(2, [], [(-1,), (-2,)], [(-1, -2)], [(1, 2)])

TRIGGER_CODES = {
    ("A", 3): GCA3,
    ("A", 4): GCA4,
    ("B", 2): GCB2,
    ("B", 3): GCB3,
    ("D", 1): GCD1,
    ("D", 2): GCD2,
}


def _skip(n: int, *omit: int) -> list[int]:
    return [a for a in range(1, n) if a not in omit]


def _block(code: Sequence[Word], F: Sequence[int], n: int, a: int, barred: bool = False,
           reverse: bool = False) -> list[Word]:
    """``code^F * (a n)``, optionally reversed, as rank-``n`` words."""
    words = [embed(w, F, n) for w in code]
    if reverse:
        words.reverse()
    return append_transposition(words, a, n, barred)


@lru_cache(maxsize=None)
def _gca(n: int) -> tuple[Word, ...]:
    if n in (3, 4):
        return TRIGGER_CODES["A", n]
    prev, prev2 = _gca(n - 1), _gca(n - 2)
    out: list[Word] = []
    if n % 2:
        F = list(range(2, n)) + [1]
        out += extend_fixed([embed(w, F, n - 1) for w in prev], n)
        for i in range(1, (n - 1) // 2 + 1):
            out += _block(prev2, [2 * i] + _skip(n, 2 * i - 1, 2 * i), n, 2 * i - 1)
            out += _block(prev2, [2 * i - 1] + _skip(n, 2 * i - 1, 2 * i), n, 2 * i,
                          reverse=True)
    else:
        out += extend_fixed(prev, n)
        # the printed step relabels GCA(n-1); only GCA(n-2) fits n-2 letters
        out += _block(prev2, list(range(2, n)), n, 1, reverse=True)
        for i in range(1, n // 2):
            out += _block(prev2, [2 * i + 1] + _skip(n, 2 * i, 2 * i + 1), n, 2 * i)
            out += _block(prev2, [2 * i] + _skip(n, 2 * i, 2 * i + 1), n, 2 * i + 1,
                          reverse=True)
    return tuple(out)


@lru_cache(maxsize=None)
def _gcb(n: int) -> tuple[Word, ...]:
    if n in (2, 3):
        return TRIGGER_CODES["B", n]
    prev, prev2 = _gcb(n - 1), _gcb(n - 2)
    out = extend_fixed(prev, n) + extend_fixed(prev[::-1], n, barred=True)
    for i in range(1, n):
        F = _skip(n, i)
        odd = i % 2 == 1
        out += _block(prev2, F, n, i, barred=odd)
        out += _block(prev2, F, n, i, barred=not odd, reverse=True)
    return tuple(out)


@lru_cache(maxsize=None)
def _gcd(n: int) -> tuple[Word, ...]:
    if n in (1, 2):
        return TRIGGER_CODES["D", n]
    F = list(range(2, n)) + [1]
    out = extend_tilde([embed(w, F, n - 1) for w in _gcb(n - 1)])
    prev2 = _gcd(n - 2)
    for i in range(1, n):
        F = _skip(n, i)
        out += _block(prev2, F, n, i)
        out += _block(prev2, F, n, i, barred=True, reverse=True)
    return tuple(out)


def gca(n: int) -> CodeList:
    """Cyclic Gray code of the involutions of S_n (n >= 3)."""
    if n < 3:
        raise ValueError(f"GCA needs n >= 3, got {n}")
    return CodeList("A", n, _gca(n))


def gcb(n: int) -> CodeList:
    """Cyclic Gray code of the involutions of the hyperoctahedral group (n >= 2)."""
    if n < 2:
        raise ValueError(f"GCB needs n >= 2, got {n}")
    return CodeList("B", n, _gcb(n))


def gcd_code(n: int) -> CodeList:
    """Cyclic Gray code of the involutions of the even-signed group (n >= 1)."""
    if n < 1:
        raise ValueError(f"GCD needs n >= 1, got {n}")
    return CodeList("D", n, _gcd(n))


def recursive_code(kind: str, n: int) -> CodeList:
    builders = {"A": gca, "B": gcb, "D": gcd_code}
    if kind not in builders:
        raise ValueError(f"unknown group type {kind!r}")
    return builders[kind](n)


# ---------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class Violation:
    check: str
    index: int | None = None
    pair: tuple[Word, Word] | None = None
    move: MoveClass | None = None
    detail: str = ""

    def __str__(self) -> str:
        where = "" if self.index is None else f" at index {self.index}"
        text = f"{self.check}{where}"
        if self.pair is not None:
            text += f": {self.pair[0]} -> {self.pair[1]}"
        if self.move is not None:
            text += f" ({self.move.kind}, {self.move.sign_changes} sign changes)"
        if self.detail:
            text += f" [{self.detail}]"
        return text


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)
    max_distance: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def first(self) -> Violation | None:
        return self.violations[0] if self.violations else None

    def __bool__(self) -> bool:
        return self.ok


def coverage_violations(kind: str, n: int, words: Sequence[Word]) -> list[Violation]:
    out = []
    seen: dict[Word, int] = {}
    for idx, w in enumerate(words):
        if len(w) != n:
            out.append(Violation("rank", idx, detail=f"{w} has rank {len(w)}"))
        elif not membership(w, kind):
            out.append(Violation("membership", idx, detail=f"{w} not in type {kind}"))
        if w in seen:
            out.append(Violation("coverage", idx, detail=f"{w} repeats index {seen[w]}"))
        seen.setdefault(w, idx)
    expected = set(enumerate_involutions(kind, n, cap=max(n, 0)))
    missing = sorted(expected - set(seen))
    extra = sorted(set(seen) - expected)
    if missing:
        out.append(Violation("coverage", detail=f"{len(missing)} missing, first {missing[0]}"))
    if extra:
        out.append(Violation("coverage", detail=f"{len(extra)} not involutions, first {extra[0]}"))
    return out


def _a2_ok(kind: str, m: MoveClass, strict_b: bool) -> bool:
    if kind == "A":
        return m.kind in ("transposition", "rotation") and m.sign_changes == 0
    if m.kind == "sign":
        return 1 <= m.sign_changes <= 2
    if m.kind == "transposition":
        return m.sign_changes <= (1 if strict_b else 2)
    if m.kind == "rotation":
        return m.sign_changes <= (0 if strict_b else 2)
    return False


def validate_properties(code: CodeList, strict_b: bool = False) -> ValidationReport:
    """Check coverage, the endpoint rule and the closeness rule of a code.

    With ``strict_b``, rotations must carry no sign change and transpositions
    at most one.  Failures are collected, never raised.
    """
    kind, n, words = code.kind, code.n, list(code.words)
    report = ValidationReport(coverage_violations(kind, n, words))
    if not words:
        report.violations.append(Violation("empty"))
        return report
    if words[0] != identity(n):
        report.violations.append(Violation("A1", 0, detail="first entry is not the identity"))
    if n >= 2:
        last = words[-1]
        ends = {from_cycles([(n - 1, n)], n)}
        if kind != "A":
            ends.add(from_cycles([(1 - n, -n)], n))
        if last not in ends:
            report.violations.append(
                Violation("A1", len(words) - 1, detail=f"last entry {last} is not (n-1 n)"))
    for idx in range(len(words) if len(words) > 1 else 0):
        u, v = words[idx], words[(idx + 1) % len(words)]
        if len(u) != len(v):
            continue
        report.max_distance = max(report.max_distance, hamming(u, v))
        m = classify_move(u, v)
        if not _a2_ok(kind, m, strict_b):
            report.violations.append(Violation("A2", idx, (u, v), m))
    return report
