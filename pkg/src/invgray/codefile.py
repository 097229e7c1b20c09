"""Reading and writing code files and printed tables.

A code file holds optional ``#`` header lines, e.g.
``# type=B n=4 algorithm=recursive``, then one involution per line as
space-separated signed integers.  A table file is a grid whose cells are
separated by ``|`` and which is read down columns, left to right.
"""

from __future__ import annotations

import io
import os
from dataclasses import dataclass, field
from typing import IO, Iterable, Iterator

from .core import CodeList, Word, format_word, parse_word


def _lines(src: str | os.PathLike | IO[str]) -> list[str]:
    if hasattr(src, "read"):
        return src.read().splitlines()
    with open(src) as fh:
        return fh.read().splitlines()


def parse_header(lines: Iterable[str]) -> dict[str, str]:
    """Collect ``key=value`` tokens from ``#`` lines."""
    out: dict[str, str] = {}
    for line in lines:
        if not line.startswith("#"):
            continue
        for tok in line[1:].split():
            if "=" in tok:
                k, v = tok.split("=", 1)
                out[k] = v
    return out


def read_code(src, kind: str | None = None, n: int | None = None) -> tuple[CodeList, dict[str, str]]:
    """Parse a code file into a CodeList plus its header fields.

    ``kind`` and ``n`` default to the header values; the rank falls back to
    the length of the first word.
    """
    lines = _lines(src)
    header = parse_header(lines)
    words = []
    for num, line in enumerate(lines, start=1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        try:
            words.append(parse_word(text))
        except ValueError as exc:
            raise ValueError(f"line {num}: {exc}") from None
    kind = kind or header.get("type")
    if kind is None:
        raise ValueError("group type missing: pass it or add a 'type=' header")
    if n is None:
        n = int(header["n"]) if "n" in header else (len(words[0]) if words else 0)
    return CodeList(kind, n, tuple(words)), header


def header_line(kind: str, n: int, **extra) -> str:
    fields = [f"type={kind}", f"n={n}"] + [f"{k}={v}" for k, v in extra.items()]
    return "# " + " ".join(fields)


def iter_code_lines(code: CodeList, **extra) -> Iterator[str]:
    yield header_line(code.kind, code.n, **extra)
    for w in code:
        yield format_word(w)


def write_code(code: CodeList, dest, **extra) -> None:
    """Write ``code`` with a header; ``dest`` is a path or a text stream."""
    if hasattr(dest, "write"):
        for line in iter_code_lines(code, **extra):
            dest.write(line + "\n")
        return
    with open(dest, "w") as fh:
        write_code(code, fh, **extra)


def dumps_code(code: CodeList, **extra) -> str:
    buf = io.StringIO()
    write_code(code, buf, **extra)
    return buf.getvalue()


@dataclass
class Table:
    """A printed table of involutions, kept column by column."""

    columns: list[list[Word]]
    header: dict[str, str] = field(default_factory=dict)

    def entries(self) -> list[tuple[tuple[int, int], Word]]:
        """``((column, row), word)`` pairs in reading order, 1-based."""
        return [((c, r), w) for c, col in enumerate(self.columns, start=1)
                for r, w in enumerate(col, start=1)]

    @property
    def words(self) -> list[Word]:
        return [w for _, w in self.entries()]

    def coordinate(self, index: int) -> tuple[int, int]:
        return self.entries()[index][0]

    def as_code(self, kind: str | None = None, n: int | None = None) -> CodeList:
        kind = kind or self.header.get("type")
        n = n or int(self.header.get("n", len(self.words[0])))
        return CodeList(kind, n, tuple(self.words))


def read_table(src) -> Table:
    """Parse a ``|``-separated grid; empty cells are skipped, values are strict."""
    lines = _lines(src)
    header = parse_header(lines)
    columns: list[list[Word]] = []
    for num, line in enumerate(lines, start=1):
        if not line.strip() or line.startswith("#"):
            continue
        for c, cell in enumerate(line.split("|")):
            while len(columns) <= c:
                columns.append([])
            if cell.strip():
                try:
                    columns[c].append(parse_word(cell))
                except ValueError as exc:
                    raise ValueError(f"line {num}, column {c + 1}: {exc}") from None
    return Table([col for col in columns if col], header)
