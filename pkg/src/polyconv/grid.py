"""Sparse integer grids on Z x Z and polyominoes.

A cell ``(x, y)`` stands for the unit square ``[x, x+1] x [y, y+1]``.  All
geometric transforms act on those squares, which is why rotation and point
reflection carry a ``-1`` offset.
"""

from __future__ import annotations

from collections import deque
from typing import Dict, Iterable, Iterator, Mapping, NamedTuple, Tuple


class GridError(Exception):
    """Base class for grid errors."""


class EmptyGrid(GridError, ValueError):
    """A geometric query was made on a grid with empty support."""


class ParseError(GridError, ValueError):
    """Malformed shape text."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class Cell(NamedTuple):
    x: int
    y: int


class IntGrid:
    """Immutable finite-support map Z^2 -> Z.

    Zero values are never stored, so the key set is the support.
    """

    __slots__ = ("_data", "_hash")

    def __init__(self, entries: Mapping[Tuple[int, int], int] | Iterable[Tuple[Tuple[int, int], int]] = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        data: Dict[Cell, int] = {}
        for (x, y), v in items:
            v = int(v)
            if v:
                data[Cell(int(x), int(y))] = v
        self._data = data
        self._hash = None

    @classmethod
    def _wrap(cls, data: Dict[Cell, int]):
        # trusted constructor: keys are Cells, values nonzero ints
        obj = object.__new__(cls)
        obj._data = data
        obj._hash = None
        return obj

    # mapping-ish protocol
    def __getitem__(self, cell: Tuple[int, int]) -> int:
        return self._data.get(Cell(*cell), 0)

    def get(self, cell: Tuple[int, int], default: int = 0) -> int:
        return self._data.get(Cell(*cell), default)

    def __contains__(self, cell) -> bool:
        return Cell(*cell) in self._data

    def __iter__(self) -> Iterator[Cell]:
        return iter(self._data)

    def __len__(self) -> int:
        return len(self._data)

    def __bool__(self) -> bool:
        return bool(self._data)

    def items(self):
        return self._data.items()

    def values(self):
        return self._data.values()

    @property
    def support(self) -> frozenset:
        return frozenset(self._data)

    def as_dict(self) -> Dict[Cell, int]:
        return dict(self._data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntGrid):
            return NotImplemented
        return self._data == other._data

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._data.items()))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"({c.x},{c.y}):{v}" for c, v in sorted(self._data.items(), key=lambda kv: (kv[0].y, kv[0].x)))
        return f"{type(self).__name__}({{{body}}})"

    # additive group structure; results are plain IntGrids
    def __add__(self, other: "IntGrid") -> "IntGrid":
        out = dict(self._data)
        for c, v in other._data.items():
            s = out.get(c, 0) + v
            if s:
                out[c] = s
            else:
                out.pop(c, None)
        return IntGrid._wrap(out)

    def __neg__(self) -> "IntGrid":
        return IntGrid._wrap({c: -v for c, v in self._data.items()})

    def __sub__(self, other: "IntGrid") -> "IntGrid":
        return self + (-other)

    def scale(self, k: int) -> "IntGrid":
        if k == 0:
            return IntGrid()
        return IntGrid._wrap({c: k * v for c, v in self._data.items()})

    def bbox(self) -> Tuple[int, int, int, int]:
        """Return ``(min_x, min_y, max_x, max_y)`` of the support."""
        if not self._data:
            raise EmptyGrid("bounding box of an empty grid")
        xs = [c.x for c in self._data]
        ys = [c.y for c in self._data]
        return min(xs), min(ys), max(xs), max(ys)

    def is_polyomino(self) -> bool:
        return all(v == 1 for v in self._data.values())

    def as_polyomino(self) -> "Polyomino":
        if not self.is_polyomino():
            raise GridError("grid has values other than 0 and 1")
        return Polyomino._wrap(dict(self._data))


class Polyomino(IntGrid):
    """A 0/1-valued IntGrid, built from a collection of cells."""

    __slots__ = ()

    def __init__(self, cells: Iterable[Tuple[int, int]] = ()):
        super().__init__({Cell(int(x), int(y)): 1 for x, y in cells})

    @property
    def cells(self) -> frozenset:
        return frozenset(self._data)

    def __repr__(self) -> str:
        cells = sorted(self._data, key=lambda c: (c.y, c.x))
        return "Polyomino([" + ", ".join(f"({c.x},{c.y})" for c in cells) + "])"


def _remap(g: IntGrid, fn) -> IntGrid:
    return type(g)._wrap({Cell(*fn(c.x, c.y)): v for c, v in g.items()})


def norm1(g: IntGrid) -> int:
    """Sum of absolute values."""
    return sum(abs(v) for v in g.values())


def norm_inf(g: IntGrid) -> int:
    """Size of the support."""
    return len(g)


def diam(g: IntGrid) -> int:
    """Taxicab diameter of the support."""
    if not g:
        raise EmptyGrid("diameter of an empty grid")
    # max |dx|+|dy| = max over the two rotated coordinates u=x+y, v=x-y
    us = [c.x + c.y for c in g]
    vs = [c.x - c.y for c in g]
    return max(max(us) - min(us), max(vs) - min(vs))


def translate(g: IntGrid, dx: int, dy: int) -> IntGrid:
    if dx == 0 and dy == 0:
        return g
    return _remap(g, lambda x, y: (x + dx, y + dy))


def rotate90(g: IntGrid) -> IntGrid:
    """Rotate a quarter turn counterclockwise about the origin."""
    return _remap(g, lambda x, y: (-1 - y, x))


def rotate(g: IntGrid, quarter_turns: int) -> IntGrid:
    for _ in range(quarter_turns % 4):
        g = rotate90(g)
    return g


def reflect(g: IntGrid) -> IntGrid:
    """Point reflection through the origin."""
    return _remap(g, lambda x, y: (-1 - x, -1 - y))


def canonical(p: IntGrid) -> IntGrid:
    """Translate so that the support's minimum x and minimum y are both 0."""
    min_x, min_y, _, _ = p.bbox()
    return translate(p, -min_x, -min_y)


def rotations(p: IntGrid) -> list:
    """Canonical forms of the distinct rotations of ``p``, in quarter-turn order."""
    seen = []
    g = p
    for _ in range(4):
        c = canonical(g)
        if c not in seen:
            seen.append(c)
        g = rotate90(g)
    return seen


def neighbours(c: Tuple[int, int]) -> Tuple[Cell, Cell, Cell, Cell]:
    x, y = c
    return Cell(x + 1, y), Cell(x - 1, y), Cell(x, y + 1), Cell(x, y - 1)


def is_rookwise_connected(p: IntGrid) -> bool:
    if not p:
        raise EmptyGrid("connectivity of an empty grid")
    cells = p.support
    start = next(iter(cells))
    seen = {start}
    queue = deque([start])
    while queue:
        for n in neighbours(queue.popleft()):
            if n in cells and n not in seen:
                seen.add(n)
                queue.append(n)
    return len(seen) == len(cells)


# --- text I/O ---------------------------------------------------------------

_ASCII = {".": 0, "#": 1, **{str(d): d for d in range(10)}}


def _parse_csv(lines) -> IntGrid:
    data: Dict[Tuple[int, int], int] = {}
    for lineno, line in enumerate(lines, 1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        parts = [s.strip() for s in text.split(",")]
        if len(parts) != 3:
            raise ParseError("expected 'x,y,value'", lineno, 1)
        try:
            x, y, v = (int(s) for s in parts)
        except ValueError:
            raise ParseError(f"non-integer field in {text!r}", lineno, 1) from None
        data[(x, y)] = data.get((x, y), 0) + v
    return IntGrid(data)


def parse_ascii(text: str) -> IntGrid:
    """Parse a shape.

    Two formats are accepted: a character grid over ``.#0-9`` where the top
    row has the largest y, and ``x,y,value`` triples one per line (detected
    by a comma anywhere in the text).  The grid form is anchored so its
    bottom-left character is cell (0, 0).
    """
    lines = text.splitlines()
    if any("," in line for line in lines):
        return _parse_csv(lines)
    rows = [line.rstrip() for line in lines]
    first = 0
    while first < len(rows) and not rows[first]:
        first += 1
    last = len(rows)
    while last > first and not rows[last - 1]:
        last -= 1
    body = rows[first:last]
    data = {}
    height = len(body)
    for r, row in enumerate(body):
        y = height - 1 - r
        for x, ch in enumerate(row):
            v = _ASCII.get(ch)
            if v is None:
                raise ParseError(f"invalid character {ch!r}", first + r + 1, x + 1)
            if v:
                data[(x, y)] = v
    return IntGrid(data)


def parse_polyomino(text: str) -> Polyomino:
    return parse_ascii(text).as_polyomino()


def render_ascii(g: IntGrid) -> str:
    """Render over the bounding box, falling back to CSV triples when a
    value is negative or above 9."""
    if not g:
        return ""
    if any(v < 0 or v > 9 for v in g.values()):
        rows = sorted(g.items(), key=lambda kv: (-kv[0].y, kv[0].x))
        return "\n".join(f"{c.x},{c.y},{v}" for c, v in rows) + "\n"
    min_x, min_y, max_x, max_y = g.bbox()
    out = []
    for y in range(max_y, min_y - 1, -1):
        row = []
        for x in range(min_x, max_x + 1):
            v = g.get((x, y))
            row.append("." if v == 0 else "#" if v == 1 else str(v))
        out.append("".join(row))
    return "\n".join(out) + "\n"
