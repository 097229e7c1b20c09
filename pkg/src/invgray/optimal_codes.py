"""Distance-2 codes for signed involutions.

Binary codes (BRGC, and BCE on even-weight words) supply the sign sequences.
``ogcb`` builds the layered code for type B by inserting, for each unsigned
involution, a path over its sign assignments into the path of its parent.
``build_d_distance2`` does the analogous splicing for type D, where links
between blocks are sign-free transpositions.  ``find_hamilton`` is the
exhaustive oracle used for the small facts (no cycle in rank 3, and so on).
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .core import (
    CodeList,
    Word,
    classify_move,
    hamming,
    identity,
    is_involution,
    transpositions,
    unsigned,
    with_signs,
)
from .counting import _unsigned_involutions, enumerate_involutions
from .recursive_codes import ValidationReport, Violation, coverage_violations

Bits = tuple[int, ...]

OGCB_CAP = 6


# ---------------------------------------------------------------------------
# binary codes


@lru_cache(maxsize=None)
def _brgc(n: int) -> tuple[Bits, ...]:
    if n == 0:
        return ((),)
    prev = _brgc(n - 1)
    return tuple((0,) + w for w in prev) + tuple((1,) + w for w in reversed(prev))


def brgc(n: int) -> list[Bits]:
    """Binary reflected Gray code on ``n`` bits.

    >>> brgc(2)
    [(0, 0), (0, 1), (1, 1), (1, 0)]
    """
    if n < 1:
        raise ValueError(f"BRGC needs n >= 1, got {n}")
    return list(_brgc(n))


@lru_cache(maxsize=None)
def _bce(n: int) -> tuple[Bits, ...]:
    if n == 2:
        return ((0, 0), (1, 1))
    u, v = _bce(n - 1), _brgc(n - 2)
    out = [(0,) + w for w in u]
    for r, w in enumerate(reversed(v)):
        out.append(((1, 0) if r % 2 == 0 else (1, 1)) + w)
    return tuple(out)


def bce(n: int) -> list[Bits]:
    """Cyclic code on the even-weight words of length ``n``; steps flip two bits."""
    if n < 2:
        raise ValueError(f"BCE needs n >= 2, got {n}")
    return list(_bce(n))


def bit_distance(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(1 for x, y in zip(a, b) if x != y)


def _bits_word(p: Sequence[int], g: Sequence[int]) -> Word:
    return with_signs(p, g)


# ---------------------------------------------------------------------------
# layers


def largest_opener(q: Sequence[int]) -> int:
    """Largest smaller letter over the transpositions of ``q``; 0 for the identity."""
    return max((a for a, _ in transpositions(q)), default=0)


@dataclass(frozen=True)
class Layer:
    """Unsigned involutions with exactly ``k`` transpositions.

    ``cells`` maps a parent ``q`` in the previous layer to the members
    ``q * (s t)`` with ``m(q) < s < t`` and ``s``, ``t`` fixed in ``q``.
    """

    k: int
    members: tuple[Word, ...]
    cells: dict[Word, tuple[Word, ...]] = field(default_factory=dict)


def _children(q: Word) -> list[Word]:
    n, m = len(q), largest_opener(q)
    out = []
    for s in range(m + 1, n + 1):
        for t in range(s + 1, n + 1):
            if q[s - 1] == s and q[t - 1] == t:
                w = list(q)
                w[s - 1], w[t - 1] = t, s
                out.append(tuple(w))
    return out


def layers(n: int) -> list[Layer]:
    out = [Layer(0, (identity(n),), {})]
    for k in range(1, n // 2 + 1):
        cells = {q: tuple(_children(q)) for q in out[-1].members}
        members = tuple(sorted(p for ps in cells.values() for p in ps))
        out.append(Layer(k, members, {q: ps for q, ps in cells.items() if ps}))
    return out


def _coords(p: Sequence[int]) -> list[tuple[int, ...]]:
    """Independent sign coordinates of ``p``: its transpositions and fixed points."""
    out = []
    for i, x in enumerate(p, start=1):
        if x == i:
            out.append((i,))
        elif x > i:
            out.append((i, x))
    return out


def sign_assignments(p: Sequence[int]) -> list[Word]:
    """All signed versions of the unsigned involution ``p``, in BRGC order."""
    p = tuple(abs(x) for x in p)
    co = _coords(p)
    out = []
    for w in _brgc(len(co)):
        g = [0] * len(p)
        for bit, c in zip(w, co):
            for pos in c:
                g[pos - 1] = bit
        out.append(with_signs(p, g))
    return out


# ---------------------------------------------------------------------------
# Hamilton paths in hypercubes


def _flip(x: Bits, i: int) -> Bits:
    return x[:i] + (1 - x[i],) + x[i + 1:]


def _drop(x: Bits, i: int) -> Bits:
    return x[:i] + x[i + 1:]


def _put(x: Bits, i: int, v: int) -> Bits:
    return x[:i] + (v,) + x[i:]


def _brgc_path(a: Bits, c: int, others: Sequence[int]) -> list[Bits]:
    """BRGC walked from ``a`` with coordinate ``c`` as the leading bit; ends at ``a ^ e_c``."""
    order = [c, *others]
    out = []
    for w in _brgc(len(a)):
        x = list(a)
        for bit, co in zip(w, order):
            if bit:
                x[co] ^= 1
        out.append(tuple(x))
    return out


def cube_path(a: Bits, b: Bits) -> list[Bits] | None:
    """A Hamilton path of the cube ``Q_m`` from ``a`` to ``b``, or None.

    One exists exactly when ``a`` and ``b`` have opposite parity (or ``m = 0``
    and ``a = b``).  Adjacent endpoints get a BRGC walk; otherwise the cube is
    split along one coordinate and the halves are joined.
    """
    m = len(a)
    if m == 0:
        return [a] if a == b else None
    if (sum(a) + sum(b)) % 2 == 0:
        return None
    if m == 1:
        return [a, b]
    diff = [i for i in range(m) if a[i] != b[i]]
    if len(diff) == 1:
        c = diff[0]
        return _brgc_path(a, c, [i for i in range(m) if i != c])
    same = [i for i in range(m) if a[i] == b[i]]
    if same:
        k = same[0]
        sub = cube_path(_drop(a, k), _drop(b, k))
        u, v = sub[0], sub[1]
        detour = cube_path(u, v)
        return ([_put(u, k, a[k])] + [_put(x, k, 1 - a[k]) for x in detour]
                + [_put(x, k, a[k]) for x in sub[1:]])
    k = diff[0]
    sa, sb = _drop(a, k), _drop(b, k)
    for c in _brgc(m - 1):
        if c != sb and (sum(c) + sum(sa)) % 2 == 1:
            return ([_put(x, k, a[k]) for x in cube_path(sa, c)]
                    + [_put(x, k, b[k]) for x in cube_path(c, sb)])
    return None


# ---------------------------------------------------------------------------
# layered type-B code


@dataclass
class _Node:
    p: Word
    path: list[Bits]  # sign words of length n, one bit per position
    cyclic: bool
    kids: dict[int, Word] = field(default_factory=dict)


def _child_paths(p: Word, g: Bits, h: Bits) -> list[list[Bits]]:
    """BRGC walks over the signs of ``p`` from ``g`` to ``h`` (one coordinate apart)."""
    co = _coords(p)
    enc = lambda x: tuple(x[c[0] - 1] for c in co)  # noqa: E731
    a, b = enc(g), enc(h)
    c = next(i for i in range(len(co)) if a[i] != b[i])
    others = [i for i in range(len(co)) if i != c]
    variants = []
    for r in range(max(1, len(others))):
        rot = others[r:] + others[:r]
        variants.append(_brgc_path(a, c, rot))
        variants.append(_brgc_path(b, c, rot)[::-1])
    out = []
    for v in variants:
        path = []
        for x in v:
            bits = [0] * len(p)
            for bit, cc in zip(x, co):
                for pos in cc:
                    bits[pos - 1] = bit
            path.append(tuple(bits))
        if path not in out:
            out.append(path)
    return out


def _parent(p: Word) -> tuple[Word, int, int]:
    s, t = max(transpositions(p))
    q = list(p)
    q[s - 1], q[t - 1] = s, t
    return tuple(q), s, t


def _flatten(tree: dict[Word, _Node], root: Word) -> list[Word]:
    out: list[Word] = []
    stack: list[tuple[Word, int]] = [(root, 0)]
    while stack:
        p, i = stack.pop()
        node = tree[p]
        if i >= len(node.path):
            continue
        out.append(_bits_word(p, node.path[i]))
        stack.append((p, i + 1))
        if i in node.kids:
            stack.append((node.kids[i], 0))
    return out


# Rank 2 admits no cycle using only single flips, paired flips and sign-free
# transpositions: 1 -2 and -1 2 each have only 1 2 and -1 -2 as neighbours.
# This is the best cyclic distance-2 listing; its step -1 2 -> 1 -2 is an
# unpaired double flip.
_OGCB2 = ((1, 2), (-1, 2), (1, -2), (-1, -2), (-2, -1), (2, 1))


def ogcb(n: int, cap: int = OGCB_CAP) -> CodeList:
    """Layered distance-2 code for the type-B involutions of rank ``n``.

    Layer 0 is BRGC over the identity.  Each ``p = q * (s t)`` is inserted as
    a BRGC walk over its own signs between consecutive entries of the path of
    ``q`` whose ``s`` and ``t`` signs agree and stay put; the walk starts and
    ends one sign-free transposition away from those entries.  Positions are
    taken smallest first, with backtracking.
    """
    if n < 2:
        raise ValueError(f"OGCB needs n >= 2, got {n}")
    if n > cap:
        raise ValueError(f"rank {n} exceeds OGCB cap {cap}")
    if n == 2:
        return CodeList("B", 2, _OGCB2)
    root = identity(n)
    tree = {root: _Node(root, list(_brgc(n)), cyclic=True)}
    order = [p for layer in layers(n)[1:] for q in sorted(layer.cells) for p in layer.cells[q]]

    def place(idx: int) -> bool:
        if idx == len(order):
            return True
        p = order[idx]
        q, s, t = _parent(p)
        host = tree[q]
        size = len(host.path)
        for pos in range(size if host.cyclic else size - 1):
            if pos in host.kids:
                continue
            g, h = host.path[pos], host.path[(pos + 1) % size]
            if g[s - 1] != g[t - 1] or h[s - 1] != g[s - 1] or h[t - 1] != g[t - 1]:
                continue
            for path in _child_paths(p, g, h):
                host.kids[pos] = p
                tree[p] = _Node(p, path, cyclic=False)
                if place(idx + 1):
                    return True
                del host.kids[pos]
                del tree[p]
        return False

    if not place(0):
        raise ConstructionFailed(SearchOutcome("exhausted"))
    return CodeList("B", n, tuple(_flatten(tree, root)))


# ---------------------------------------------------------------------------
# type-D builder


@dataclass(frozen=True)
class _DBlock:
    """Even-signed versions of one unsigned involution ``p``.

    Coordinates are its transpositions plus moves ``{x, d}`` flipping a
    fixed point ``x`` together with a designated fixed point ``d``; every
    coordinate step is a double sign change.
    """

    p: Word

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return transpositions(self.p)

    @property
    def fixed(self) -> list[int]:
        return [i for i, x in enumerate(self.p, start=1) if x == i]

    def path(self, s: Word, e: Word) -> list[Word] | None:
        """A Hamilton path of the block from ``s`` to ``e``, or None."""
        for d in self.fixed or [None]:
            co = list(self.pairs) + [(x, d) for x in self.fixed if x != d]
            enc = lambda w: tuple(1 if w[c[0] - 1] < 0 else 0 for c in co)  # noqa: E731
            bits = cube_path(enc(s), enc(e))
            if bits is None:
                continue
            out = []
            for x in bits:
                w = list(s)
                for bit, c, b0 in zip(x, co, enc(s)):
                    if bit != b0:
                        for pos in c:
                            w[pos - 1] = -w[pos - 1]
                out.append(tuple(w))
            return out
        return None


def _link(x: Word, p: Word) -> Word | None:
    """``x * (i j)`` when that is a signed version of ``p``, else None."""
    ux = unsigned(x)
    diff = [i for i in range(len(p)) if ux[i] != p[i]]
    if len(diff) != 2:
        return None
    i, j = diff
    w = list(x)
    w[i], w[j] = w[j], w[i]
    w = tuple(w)
    return w if unsigned(w) == p and is_involution(w) else None


class _Budget:
    def __init__(self, max_nodes: int | None, timeout: float | None):
        self.max_nodes, self.timeout = max_nodes, timeout
        self.nodes = 0
        self.start = time.monotonic()

    def tick(self) -> bool:
        """Count one node; False once the budget is spent."""
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            return False
        if self.timeout is not None and self.nodes % 64 == 0:
            return time.monotonic() - self.start <= self.timeout
        return True

    @property
    def elapsed_ms(self) -> int:
        return int(1000 * (time.monotonic() - self.start))


def build_d_distance2(n: int, max_nodes: int | None = None,
                      timeout: float | None = None) -> CodeList:
    """Distance-2 cycle through the type-D involutions of rank ``n``.

    Starts from BCE_n over the identity.  Every other unsigned involution is
    a block whose signed versions are walked by double sign changes; a block
    is spliced between consecutive entries ``x, y`` of the current cycle when
    ``x -> start`` and ``end -> y`` are sign-free transpositions.  The block
    with the fewest splice options goes first.  Ranks 4 and 5 are the
    supported cases; larger ranks need a ``timeout`` or ``max_nodes`` budget.
    """
    if n < 4:
        raise ValueError(f"no distance-2 cycle construction for rank {n} < 4")
    if n > 5 and max_nodes is None and timeout is None:
        raise ValueError("ranks above 5 are experimental; pass max_nodes or timeout")
    budget = _Budget(max_nodes, timeout)
    root = identity(n)
    cycle = [with_signs(root, g) for g in _bce(n)]
    blocks = [_DBlock(p) for p in sorted(_unsigned_involutions(n), key=lambda p: (len(transpositions(p)), p))
              if p != root]

    def options(cyc: list[Word], b: _DBlock) -> list[tuple[int, list[Word]]]:
        out = []
        for pos in range(len(cyc)):
            x, y = cyc[pos], cyc[(pos + 1) % len(cyc)]
            s = _link(x, b.p)
            e = _link(y, b.p) if s is not None else None
            if e is not None:
                path = b.path(s, e)
                if path:
                    out.append((pos, path))
        return out

    state = {"spent": False}

    def rec(cyc: list[Word], rest: list[_DBlock]) -> list[Word] | None:
        if not rest:
            return cyc
        best = None
        for b in rest:
            opts = options(cyc, b)
            if opts and (best is None or len(opts) < len(best[1])):
                best = (b, opts)
        if best is None:
            return None
        b, opts = best
        others = [r for r in rest if r is not b]
        for pos, path in opts:
            if not budget.tick():
                state["spent"] = True
                return None
            found = rec(cyc[:pos + 1] + path + cyc[pos + 1:], others)
            if found or state["spent"]:
                return found
        return None

    found = rec(cycle, blocks)
    if found is None:
        kind = "timed_out" if state["spent"] else "exhausted"
        raise ConstructionFailed(SearchOutcome(kind, None, budget.nodes, budget.elapsed_ms))
    return CodeList("D", n, tuple(found))


# ---------------------------------------------------------------------------
# distance-2 verification


def _move_ok(kind: str, u: Word, v: Word) -> bool:
    m = classify_move(u, v)
    if m.kind == "transposition":
        return m.sign_changes == 0
    if m.kind != "sign":
        return False
    if m.sign_changes == 1:
        return True
    a, b = m.positions
    # type B wants the double flip on the two letters of one transposition
    return kind == "D" or abs(u[a - 1]) == b


def verify_distance2(code: CodeList, cyclic: bool = True, moves: bool = True) -> ValidationReport:
    """Coverage, distinctness, Hamming distance at most 2, and allowed moves.

    Allowed moves are a single sign change, a double sign change (on the two
    letters of a transposition in type B, on any two letters in type D), and
    a sign-free transposition.  ``moves=False`` drops that last check, which
    leaves exactly the Hamilton condition in the distance-2 graph.
    """
    words = list(code.words)
    report = ValidationReport(coverage_violations(code.kind, code.n, words))
    steps = len(words) if cyclic else len(words) - 1
    for idx in range(steps if len(words) > 1 else 0):
        u, v = words[idx], words[(idx + 1) % len(words)]
        if len(u) != len(v):
            continue
        d = hamming(u, v)
        report.max_distance = max(report.max_distance, d)
        if d > 2:
            report.violations.append(Violation("distance", idx, (u, v), classify_move(u, v),
                                               f"distance {d}"))
        elif moves and not _move_ok(code.kind, u, v):
            report.violations.append(Violation("move", idx, (u, v), classify_move(u, v)))
    return report


# ---------------------------------------------------------------------------
# exhaustive Hamilton search


@dataclass(frozen=True)
class Distance2Graph:
    """Involutions of one type and rank, adjacent at Hamming distance exactly 2."""

    kind: str
    n: int
    vertices: tuple[Word, ...]
    adjacency: tuple[tuple[int, ...], ...]

    def neighbours(self, w: Sequence[int]) -> list[Word]:
        i = self.vertices.index(tuple(w))
        return [self.vertices[j] for j in self.adjacency[i]]

    def degree(self, w: Sequence[int]) -> int:
        return len(self.neighbours(w))

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2


def distance2_graph(kind: str, n: int, cap: int | None = None) -> Distance2Graph:
    verts = enumerate_involutions(kind, n, cap).words
    adj = tuple(
        tuple(j for j, v in enumerate(verts) if hamming(u, v) == 2) for u in verts
    )
    return Distance2Graph(kind, n, verts, adj)


@dataclass(frozen=True)
class SearchOutcome:
    """Result of a Hamilton search: ``found``, ``exhausted`` or ``timed_out``.

    A found witness passes ``verify_distance2(witness, moves=False)``.
    """

    outcome: str
    witness: CodeList | None = None
    nodes_expanded: int = 0
    elapsed_ms: int = 0
    budget: dict | None = None

    @property
    def found(self) -> bool:
        return self.outcome == "found"

    def to_dict(self, timing: bool = True) -> dict:
        out: dict = {"outcome": self.outcome}
        if self.witness is not None:
            out["witness"] = [list(w) for w in self.witness]
        out["nodes_expanded"] = self.nodes_expanded
        if timing:
            out["elapsed_ms"] = self.elapsed_ms
        if self.budget is not None:
            out["budget"] = self.budget
        return out

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing))


class ConstructionFailed(RuntimeError):
    def __init__(self, outcome: SearchOutcome):
        super().__init__(f"construction search ended: {outcome.outcome}")
        self.outcome = outcome


def _stranded(adj, adj_sets, visited, free, prev: int, end: int, start: int, obj: str) -> bool:
    """Whether moving the path end from ``prev`` to ``end`` strands a vertex.

    Only neighbours of ``prev`` lose a usable neighbour.  An unvisited vertex
    needs two usable neighbours on a cycle (the start counts) and one on a
    path.
    """
    need = 2 if obj == "cycle" else 1
    for j in adj[prev]:
        if visited[j]:
            continue
        avail = free[j] + (end in adj_sets[j])
        if obj == "cycle":
            avail += start in adj_sets[j]
        if avail < need:
            return True
    return False


def find_hamilton(g: Distance2Graph, obj: str = "cycle", max_nodes: int | None = None,
                  timeout: float | None = None, threads: int = 1) -> SearchOutcome:
    """Depth-first search for a Hamilton cycle or path in ``g``.

    Neighbours are tried by fewest unvisited neighbours first, then by word.
    Cycles start at the smallest vertex; paths try every start in order.
    ``exhausted`` means the whole tree was searched.  ``threads`` is accepted
    for interface compatibility; the search itself is sequential, so results
    never depend on it.
    """
    if obj not in ("cycle", "path"):
        raise ValueError(f"object must be 'cycle' or 'path', got {obj!r}")
    if threads < 1:
        raise ValueError("threads must be >= 1")
    budget = _Budget(max_nodes, timeout)
    info = {"max_nodes": max_nodes, "timeout_seconds": timeout}
    N = len(g.vertices)
    adj = g.adjacency
    adj_sets = [frozenset(a) for a in adj]

    def done(kind: str, order: list[int] | None = None) -> SearchOutcome:
        wit = None if order is None else CodeList(g.kind, g.n, tuple(g.vertices[i] for i in order))
        return SearchOutcome(kind, wit, budget.nodes, budget.elapsed_ms,
                             info if kind == "timed_out" else None)

    if N == 0:
        return done("exhausted")
    if N == 1:
        budget.tick()
        return done("found", [0])
    if obj == "cycle" and N == 2:
        return done("exhausted")

    starts = [0] if obj == "cycle" else list(range(N))
    for s in starts:
        visited = [False] * N
        visited[s] = True
        order = [s]
        free = [len(a) for a in adj]  # unvisited neighbour counts
        for j in adj[s]:
            free[j] -= 1
        if not budget.tick():
            return done("timed_out")

        def ranked(v: int) -> list[int]:
            cand = [j for j in adj[v] if not visited[j]]
            return sorted(cand, key=lambda j: (free[j], j))

        stack = [iter(ranked(s))]
        while stack:
            if len(order) == N:
                if obj == "path" or s in adj[order[-1]]:
                    return done("found", order)
                nxt = None
            else:
                nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                if len(order) > 1:
                    v = order.pop()
                    visited[v] = False
                    for j in adj[v]:
                        free[j] += 1
                continue
            if obj == "cycle" and free[s] == 0 and len(order) < N - 1:
                continue
            prev = order[-1]
            visited[nxt] = True
            order.append(nxt)
            for j in adj[nxt]:
                free[j] -= 1
            if len(order) < N and _stranded(adj, adj_sets, visited, free, prev, nxt, s, obj):
                order.pop()
                visited[nxt] = False
                for j in adj[nxt]:
                    free[j] += 1
                continue
            if not budget.tick():
                return done("timed_out")
            stack.append(iter(ranked(nxt)))
    return done("exhausted")
