"""Compositions, words and Young diagrams.

A composition ``(a_0, ..., a_{n-1})`` of ``s`` into ``n`` parts is a histogram
with ``n`` bins and ``s`` data points.  Its word lists bin ``i`` exactly
``a_i`` times, and reading that word as *ascending* row lengths (bottom row
first) gives a Young diagram inside an ``s x (n-1)`` rectangle.

Diagrams store only their nonzero rows, top to bottom; zero-length rows are
implicit padding up to ``max_rows``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import zip_longest
from math import comb
from typing import Iterator, Sequence


class CompositionError(ValueError):
    """Malformed composition, diagram, or mismatched tuple."""


@dataclass(frozen=True)
class Composition:
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(a) for a in self.entries)
        if not entries:
            raise CompositionError("a composition needs at least one bin")
        if any(a < 0 for a in entries):
            raise CompositionError(f"negative entry in {entries}")
        object.__setattr__(self, "entries", entries)

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def s(self) -> int:
        return sum(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self):
        return ",".join(map(str, self.entries))


@dataclass(frozen=True)
class YoungDiagram:
    """Weakly decreasing positive row lengths inside a ``max_rows x max_cols`` box."""

    rows: tuple[int, ...]
    max_rows: int
    max_cols: int

    def __post_init__(self):
        rows = tuple(int(r) for r in self.rows if r != 0)
        if any(r < 0 for r in rows):
            raise CompositionError(f"negative row length in {self.rows}")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise CompositionError(f"rows {rows} are not weakly decreasing")
        if len(rows) > self.max_rows or (rows and rows[0] > self.max_cols):
            raise CompositionError(
                f"diagram {rows} does not fit in a {self.max_rows}x{self.max_cols} box"
            )
        object.__setattr__(self, "rows", rows)

    @property
    def size(self) -> int:
        return sum(self.rows)

    @property
    def box(self) -> tuple[int, int]:
        return (self.max_rows, self.max_cols)

    def padded_rows(self) -> tuple[int, ...]:
        return self.rows + (0,) * (self.max_rows - len(self.rows))

    def cells(self) -> set[tuple[int, int]]:
        return {(i, j) for i, r in enumerate(self.rows) for j in range(r)}

    def __contains__(self, cell) -> bool:
        i, j = cell
        return 0 <= i < len(self.rows) and 0 <= j < self.rows[i]

    def contains(self, other: "YoungDiagram") -> bool:
        """True when ``other`` is a subdiagram of ``self``."""
        return len(other.rows) <= len(self.rows) and all(
            b <= a for a, b in zip(self.rows, other.rows)
        )

    def __str__(self):
        return "\n".join("#" * r for r in self.rows) or "(empty)"


def word_of(c: Composition) -> tuple[int, ...]:
    """The weakly increasing word listing bin ``i`` exactly ``c[i]`` times."""
    return tuple(i for i, a in enumerate(c.entries) for _ in range(a))


def composition_of_word(word: Sequence[int], n: int) -> Composition:
    entries = [0] * n
    for symbol in word:
        entries[symbol] += 1
    return Composition(tuple(entries))


def diagram_of(c: Composition) -> YoungDiagram:
    # the word gives row lengths bottom-up, so reverse it
    rows = tuple(reversed(word_of(c)))
    return YoungDiagram(rows, c.s, c.n - 1)


def composition_of(d: YoungDiagram, s: int, n: int) -> Composition:
    """Inverse of :func:`diagram_of` for the box ``s x (n-1)``."""
    if len(d.rows) > s or (d.rows and d.rows[0] > n - 1):
        raise CompositionError(f"diagram {d.rows} does not fit in a {s}x{n - 1} box")
    entries = [0] * n
    for r in d.rows:
        entries[r] += 1
    entries[0] += s - len(d.rows)
    return Composition(tuple(entries))


def conjugate(d: YoungDiagram) -> YoungDiagram:
    """Transpose across the main diagonal; the box becomes ``max_cols x max_rows``."""
    first = d.rows[0] if d.rows else 0
    cols = tuple(sum(1 for r in d.rows if r > j) for j in range(first))
    return YoungDiagram(cols, d.max_cols, d.max_rows)


def corners(d: YoungDiagram) -> int:
    """Number of removable cells, i.e. the number of distinct row lengths."""
    return len(set(d.rows))


def enumerate_compositions(s: int, n: int) -> Iterator[Composition]:
    """Yield all of ``C(s, n)`` in ascending lexicographic order of entries.

    There are ``binom(s+n-1, s)`` of them.  ``n = 1`` gives the single
    composition ``(s,)``; ``s = 0`` gives the all-zero composition.
    """
    if s < 0 or n < 1:
        raise CompositionError(f"need s >= 0 and n >= 1, got s={s}, n={n}")

    def rec(remaining, bins):
        if bins == 1:
            yield (remaining,)
            return
        for first in range(remaining + 1):
            for rest in rec(remaining - first, bins - 1):
                yield (first,) + rest

    for entries in rec(s, n):
        yield Composition(entries)


def count_compositions(s: int, n: int) -> int:
    return comb(s + n - 1, s)


def enumerate_diagrams(max_rows: int, max_cols: int) -> Iterator[YoungDiagram]:
    """All Young diagrams fitting in the box, i.e. ``Y(max_rows, max_cols)``."""
    for c in enumerate_compositions(max_rows, max_cols + 1):
        yield diagram_of(c)


def _check_same_box(a: YoungDiagram, b: YoungDiagram):
    if a.box != b.box:
        raise CompositionError(f"bounding boxes differ: {a.box} vs {b.box}")


def join(a: YoungDiagram, b: YoungDiagram) -> YoungDiagram:
    """Union of two diagrams (least upper bound in Young's lattice)."""
    _check_same_box(a, b)
    rows = tuple(max(x, y) for x, y in zip_longest(a.rows, b.rows, fillvalue=0))
    return YoungDiagram(rows, a.max_rows, a.max_cols)


def meet(a: YoungDiagram, b: YoungDiagram) -> YoungDiagram:
    """Intersection of two diagrams (greatest lower bound in Young's lattice)."""
    _check_same_box(a, b)
    rows = tuple(min(x, y) for x, y in zip(a.rows, b.rows))
    return YoungDiagram(rows, a.max_rows, a.max_cols)


def check_common_shape(tuple_: Sequence[Composition]) -> tuple[int, int]:
    """Return the shared ``(s, n)`` of a tuple of compositions or raise."""
    if not tuple_:
        raise CompositionError("empty tuple of compositions")
    s, n = tuple_[0].s, tuple_[0].n
    for c in tuple_[1:]:
        if (c.s, c.n) != (s, n):
            raise CompositionError(
                f"compositions must share s and n: ({s},{n}) vs ({c.s},{c.n})"
            )
    return s, n


def parse_composition(text: str) -> Composition:
    try:
        entries = tuple(int(part.strip()) for part in text.split(","))
    except ValueError:
        raise CompositionError(f"cannot parse composition {text!r}") from None
    return Composition(entries)


def parse_tuple(text: str) -> tuple[Composition, ...]:
    """Parse ``"4,1,1,0,0;3,0,0,0,3"`` into a tuple of compositions."""
    parts = [p for p in text.split(";") if p.strip()]
    if not parts:
        raise CompositionError("no compositions given")
    return tuple(parse_composition(p) for p in parts)
