"""Signed-permutation algebra shared by every code builder.

Group elements of types A, B and D are stored as plain tuples holding the
one-line word: entry ``i - 1`` is the image of ``i`` and a negative value is a
barred letter.  Only images of positive letters are kept; ``w(-i) = -w(i)``
is implicit.

Products follow the positional convention ``(u * v)(i) = u(v(i))``, so that
right multiplication by the adjacent transposition ``s_i`` exchanges the
entries in positions ``i`` and ``i + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Word = tuple[int, ...]

TYPES = ("A", "B", "D")


# ---------------------------------------------------------------------------
# construction, parsing, formatting


def signed_perm(word: Iterable[int]) -> Word:
    """Validate ``word`` as a signed permutation and return it as a tuple."""
    w = tuple(int(x) for x in word)
    if sorted(abs(x) for x in w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a signed permutation: {w}")
    return w


def identity(n: int) -> Word:
    return tuple(range(1, n + 1))


def parse_word(text: str) -> Word:
    """Parse ``"-3 2 -1"`` into ``(-3, 2, -1)``."""
    return signed_perm(int(tok) for tok in text.split())


def format_word(w: Sequence[int]) -> str:
    return " ".join(str(x) for x in w)


def pretty(w: Sequence[int]) -> str:
    """Display form using combining overbars for negative letters."""
    return " ".join(f"{-x}̅" if x < 0 else str(x) for x in w)


# ---------------------------------------------------------------------------
# group operations


def _check_ranks(u: Sequence[int], v: Sequence[int]) -> None:
    if len(u) != len(v):
        raise ValueError(f"rank mismatch: {len(u)} != {len(v)}")


def compose(u: Sequence[int], v: Sequence[int]) -> Word:
    """Return ``u * v`` with ``(u * v)(i) = u(v(i))``."""
    _check_ranks(u, v)
    return tuple(u[x - 1] if x > 0 else -u[-x - 1] for x in v)


def compose_all(*ws: Sequence[int]) -> Word:
    out = tuple(ws[0])
    for w in ws[1:]:
        out = compose(out, w)
    return out


def inverse(u: Sequence[int]) -> Word:
    inv = [0] * len(u)
    for i, x in enumerate(u, start=1):
        inv[abs(x) - 1] = i if x > 0 else -i
    return tuple(inv)


def is_involution(u: Sequence[int]) -> bool:
    return all(
        (u[x - 1] if x > 0 else -u[-x - 1]) == i for i, x in enumerate(u, start=1)
    )


def negatives(u: Sequence[int]) -> int:
    return sum(1 for x in u if x < 0)


def membership(u: Sequence[int], kind: str) -> bool:
    """Whether ``u`` lies in the group of the given type (A, B or D)."""
    if kind == "A":
        return all(x > 0 for x in u)
    if kind == "B":
        return True
    if kind == "D":
        return negatives(u) % 2 == 0
    raise ValueError(f"unknown group type {kind!r}")


def hamming(u: Sequence[int], v: Sequence[int]) -> int:
    _check_ranks(u, v)
    return sum(1 for a, b in zip(u, v) if a != b)


def unsigned(u: Sequence[int]) -> Word:
    return tuple(abs(x) for x in u)


def sign_bits(u: Sequence[int]) -> tuple[int, ...]:
    """Sign word of ``u``: bit ``i`` is 1 when position ``i`` is negative."""
    return tuple(1 if x < 0 else 0 for x in u)


def with_signs(p: Sequence[int], bits: Sequence[int]) -> Word:
    """Inverse of (``unsigned``, ``sign_bits``)."""
    return tuple(-x if b else x for x, b in zip(p, bits))


# ---------------------------------------------------------------------------
# cycle form


@dataclass(frozen=True)
class CycleForm:
    """Cycle decomposition of an involution.

    ``fixed`` holds signed fixed letters, ``pairs`` holds transpositions
    ``(a, b)`` with ``|a| < |b|`` and a common sign.
    """

    n: int
    fixed: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...]

    def __str__(self) -> str:
        parts = [(abs(x), f"({x})") for x in self.fixed]
        parts += [(abs(a), f"({a} {b})") for a, b in self.pairs]
        return "".join(s for _, s in sorted(parts))


def to_cycles(u: Sequence[int]) -> CycleForm:
    if not is_involution(u):
        raise ValueError(f"not an involution: {tuple(u)}")
    fixed, pairs = [], []
    for i, x in enumerate(u, start=1):
        j = abs(x)
        if j == i:
            fixed.append(x)
        elif i < j:
            pairs.append((i, j) if x > 0 else (-i, -j))
    return CycleForm(len(u), tuple(fixed), tuple(pairs))


def from_cycles(c: CycleForm | Iterable[Sequence[int]], n: int | None = None) -> Word:
    """Build an involution from cycles.

    Accepts a :class:`CycleForm` or an iterable of 1- and 2-cycles such as
    ``[(1, 3), (-2,)]``; letters not mentioned are fixed and positive.
    """
    if isinstance(c, CycleForm):
        n = c.n if n is None else n
        cycles = [(x,) for x in c.fixed] + [tuple(p) for p in c.pairs]
    else:
        cycles = [tuple(cyc) for cyc in c]
    if n is None:
        raise ValueError("rank required")
    w: list[int | None] = [None] * n
    for cyc in cycles:
        letters = [abs(x) for x in cyc]
        if any(not 1 <= a <= n for a in letters):
            raise ValueError(f"letter out of range in {cyc}")
        if any(w[a - 1] is not None for a in letters):
            raise ValueError(f"overlapping cycle {cyc}")
        if len(cyc) == 1:
            w[letters[0] - 1] = cyc[0]
        elif len(cyc) == 2:
            a, b = cyc
            if (a < 0) != (b < 0) or abs(a) == abs(b):
                raise ValueError(f"mixed signs or repeated letter in {cyc}")
            sgn = -1 if a < 0 else 1
            w[abs(a) - 1] = sgn * abs(b)
            w[abs(b) - 1] = sgn * abs(a)
        else:
            raise ValueError(f"involutions only have cycles of length <= 2: {cyc}")
    return tuple(i + 1 if x is None else x for i, x in enumerate(w))


def transpositions(u: Sequence[int]) -> list[tuple[int, int]]:
    """Unsigned transpositions ``(a, b)``, ``a < b``, of the involution ``u``."""
    return [(i, abs(x)) for i, x in enumerate(u, start=1) if abs(x) > i]


# ---------------------------------------------------------------------------
# move classification


@dataclass(frozen=True)
class MoveClass:
    """How an involution ``v`` is reached from its predecessor ``u``.

    ``kind`` is one of ``identity``, ``sign``, ``transposition``, ``rotation``
    or ``other``.  ``positions`` are the 1-based positions whose letters move
    (the flipped positions for ``sign``).  ``sign_changes`` counts every letter
    whose sign flips, including letters that stay in place: a type-D step such
    as ``-1 2 -3 -> -2 -1 3`` is a transposition with two sign changes.
    ``element`` is the quotient ``u^-1 v``, so ``compose(u, element) == v``.
    """

    kind: str
    positions: tuple[int, ...]
    sign_changes: int
    element: Word

    def apply(self, u: Sequence[int]) -> Word:
        return compose(u, self.element)


def classify_move(u: Sequence[int], v: Sequence[int]) -> MoveClass:
    _check_ranks(u, v)
    q = compose(inverse(u), v)
    flips = sum(1 for x in q if x < 0)
    if tuple(u) == tuple(v):
        return MoveClass("identity", (), 0, q)
    moved = tuple(i for i, x in enumerate(q, start=1) if abs(x) != i)
    if not moved:
        pos = tuple(i for i, x in enumerate(q, start=1) if x < 0)
        kind = "sign" if len(pos) <= 2 else "other"
        return MoveClass(kind, pos, flips, q)
    if len(moved) == 2:
        return MoveClass("transposition", moved, flips, q)
    if len(moved) == 3:
        return MoveClass("rotation", moved, flips, q)
    return MoveClass("other", moved, flips, q)


# ---------------------------------------------------------------------------
# relabeling and list operators


def embed(w: Sequence[int], F: Sequence[int], n: int) -> Word:
    """Relabel ``w`` along ``F`` (one-line ``a_1 ... a_m``) inside rank ``n``.

    Each cycle ``(x y)`` becomes ``(F(x) F(y))`` with its signs kept; letters
    outside the image of ``F`` are fixed and positive.
    """
    if len(w) != len(F):
        raise ValueError(f"rank mismatch: word {len(w)} vs relabeling {len(F)}")
    if len(set(F)) != len(F) or any(not 1 <= a <= n for a in F):
        raise ValueError(f"bad relabeling {tuple(F)} for rank {n}")
    out = list(range(1, n + 1))
    for i, x in enumerate(w):
        out[F[i] - 1] = F[x - 1] if x > 0 else -F[-x - 1]
    return tuple(out)


def relabel(w: Sequence[int], F: Sequence[int]) -> Word:
    """Relabel ``w`` along ``F`` and index the result by the sorted alphabet.

    >>> relabel((3, 2, 1), (4, 1, 2))
    (1, 4, 2)
    """
    alphabet = sorted(F)
    full = embed(w, F, max(alphabet))
    return tuple(full[a - 1] for a in alphabet)


@dataclass(frozen=True)
class CodeList:
    """An ordered list of involutions of one type and rank."""

    kind: str
    n: int
    words: tuple[Word, ...]

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)

    def __getitem__(self, i):
        return self.words[i]


def relabel_list(L: Sequence[Word], F: Sequence[int], n: int) -> list[Word]:
    return [embed(w, F, n) for w in L]


def reverse_list(L: Sequence[Word]) -> list[Word]:
    return list(reversed(L))


def extend_fixed(L: Sequence[Word], k: int, barred: bool = False) -> list[Word]:
    """``L * k``: adjoin letter ``k`` (as the next position) fixed in every entry."""
    if any(k in map(abs, w) for w in L):
        raise ValueError(f"letter {k} already in alphabet")
    x = -k if barred else k
    return [tuple(w) + (x,) for w in L]


def append_transposition(L: Sequence[Word], a: int, b: int, barred: bool = False) -> list[Word]:
    """Right-multiply every entry by ``(a b)``, or ``(-a -b)`` when barred.

    Entries are rank-``n`` words in which ``a`` and ``b`` are still fixed and
    positive; they are padded if ``max(a, b)`` exceeds their rank.
    """
    out = []
    for w in L:
        w = list(w) + list(range(len(w) + 1, max(a, b) + 1))
        if w[a - 1] != a or w[b - 1] != b:
            raise ValueError(f"letters {a}, {b} are not free in {tuple(w)}")
        sgn = -1 if barred else 1
        w[a - 1], w[b - 1] = sgn * b, sgn * a
        out.append(tuple(w))
    return out


def extend_tilde(L: Sequence[Word]) -> list[Word]:
    """Adjoin letter ``n`` with the sign that makes the negative count even."""
    return [tuple(w) + (-(len(w) + 1) if negatives(w) % 2 else len(w) + 1,) for w in L]
