"""Polyomino families: spaced bars, squares, the X pentomino, spiky logs and
snakes, with the non-tiling checks that go with each family."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Tuple

from .criterion import Certificate, check
from .grid import Cell, EmptyGrid, Polyomino, canonical, neighbours, rotations


class InvalidSpec(ValueError):
    pass


class NotASnake(ValueError):
    pass


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InvalidSpec(message)


def make_spaced_bars(n: int, a: int, b: int) -> Polyomino:
    """``n`` horizontal bars of length ``a`` separated by ``b`` blank cells.

    ``make_spaced_bars(n, 2, 1)`` is D_n.
    """
    _require(n >= 1, f"bar count must be >= 1, got {n}")
    _require(a >= 1, f"bar length must be >= 1, got {a}")
    _require(b >= 1, f"gap must be >= 1, got {b}")
    return Polyomino((i * (a + b) + j, 0) for i in range(n) for j in range(a))


def make_dn(n: int) -> Polyomino:
    return make_spaced_bars(n, 2, 1)


def make_rect(a: int, b: int) -> Polyomino:
    """Filled rectangle, ``a`` wide and ``b`` tall."""
    _require(a >= 1 and b >= 1, f"rectangle sides must be >= 1, got {a}x{b}")
    return Polyomino((x, y) for x in range(a) for y in range(b))


def make_square(k: int) -> Polyomino:
    _require(k >= 1, f"square side must be >= 1, got {k}")
    return make_rect(k, k)


def make_x_pentomino() -> Polyomino:
    return Polyomino([(1, 0), (0, 1), (1, 1), (2, 1), (1, 2)])


T_TETROMINO = Polyomino([(0, 0), (1, 0), (2, 0), (1, 1)])
SQUARE_TETROMINO = make_square(2)
U_PENTOMINO = Polyomino([(0, 0), (2, 0), (0, 1), (1, 1), (2, 1)])


# --- spiky logs -------------------------------------------------------------

def log_ring(a: int, b: int) -> List[Cell]:
    """Cells of the frame around the a x b log, walked counterclockwise from
    the bottom-left corner (-1, -1)."""
    ring = [Cell(x, -1) for x in range(-1, a)]
    ring += [Cell(a, y) for y in range(-1, b)]
    ring += [Cell(x, b) for x in range(a, -1, -1)]
    ring += [Cell(-1, y) for y in range(b, -1, -1)]
    return ring


@dataclass(frozen=True)
class SpikyLogSpec:
    a: int
    b: int
    spikes: Tuple[Cell, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "spikes", tuple(Cell(*s) for s in self.spikes))

    def validate(self) -> None:
        a, b = self.a, self.b
        _require(a > 1 and b > 1, f"log must be at least 2x2, got {a}x{b}")
        ring = log_ring(a, b)
        pos = {c: i for i, c in enumerate(ring)}
        log = {(x, y) for x in range(a) for y in range(b)}
        if len(set(self.spikes)) != len(self.spikes):
            raise InvalidSpec("duplicate spike")
        for s in self.spikes:
            _require(s not in log, f"spike {tuple(s)} overlaps the log")
            _require(any(nb in log for nb in neighbours(s)),
                     f"spike {tuple(s)} does not share an edge with the log")
        idx = sorted(pos[s] for s in self.spikes)
        m = len(ring)
        if len(idx) < 2:
            return
        for i, j in zip(idx, idx[1:] + idx[:1]):
            blanks = (j - i) % m - 1
            _require(blanks >= 2, f"spikes at ring positions {i} and {j} have only {blanks} blank cells between them")


def make_spiky_log(spec: SpikyLogSpec) -> Polyomino:
    spec.validate()
    return Polyomino(list(make_rect(spec.a, spec.b).cells) + list(spec.spikes))


def spike_slots(a: int, b: int) -> List[Cell]:
    """Ring cells that touch the log, i.e. every ring cell except the corners."""
    log_cells = make_rect(a, b).cells
    return [c for c in log_ring(a, b) if any(nb in log_cells for nb in neighbours(c))]


# --- snakes -----------------------------------------------------------------

def _count_copies(p: Polyomino, template: Polyomino, limit: Optional[int] = None) -> int:
    """Distinct cell subsets of ``p`` congruent to ``template`` by translation
    and rotation."""
    if not p:
        raise EmptyGrid("empty polyomino")
    cells = p.cells
    found = set()
    for shape in rotations(template):
        shape_cells = list(shape)
        anchor = shape_cells[0]
        for c in cells:
            dx, dy = c.x - anchor.x, c.y - anchor.y
            placed = frozenset(Cell(s.x + dx, s.y + dy) for s in shape_cells)
            if placed <= cells:
                found.add(placed)
                if limit is not None and len(found) >= limit:
                    return len(found)
    return len(found)


def is_snake(p: Polyomino) -> bool:
    """No subset is a T tetromino or a 2x2 square."""
    return _count_copies(p, T_TETROMINO, 1) == 0 and _count_copies(p, SQUARE_TETROMINO, 1) == 0


def count_u_turns(p: Polyomino) -> int:
    return _count_copies(p, U_PENTOMINO)


def random_spiky_log(rng: random.Random, a: int, b: int, spikes: int, tries: int = 200) -> Optional[SpikyLogSpec]:
    """Random valid spiky log with exactly ``spikes`` spikes, or None if the
    greedy sampler keeps failing."""
    slots = spike_slots(a, b)
    ring = log_ring(a, b)
    pos = {c: i for i, c in enumerate(ring)}
    m = len(ring)
    for _ in range(tries):
        order = slots[:]
        rng.shuffle(order)
        picked: List[Cell] = []
        for c in order:
            if all(min((pos[c] - pos[d]) % m, (pos[d] - pos[c]) % m) >= 3 for d in picked):
                picked.append(c)
                if len(picked) == spikes:
                    return SpikyLogSpec(a, b, tuple(picked))
    return None


def random_snake(rng: random.Random, length: int, turn_bias: float = 0.6) -> Optional[Polyomino]:
    """Self-avoiding walk whose cells touch only their walk neighbours, so
    the result never contains a T tetromino or a 2x2 square.

    Returns None if the walk traps itself before reaching ``length`` cells.
    """
    path = [Cell(0, 0)]
    cells = {path[0]}
    heading = (1, 0)
    while len(path) < length:
        here = path[-1]
        options = []
        for d in ((1, 0), (0, 1), (-1, 0), (0, -1)):
            nxt = Cell(here.x + d[0], here.y + d[1])
            if nxt in cells:
                continue
            if any(nb in cells and nb != here for nb in neighbours(nxt)):
                continue
            options.append(d)
        if not options:
            return None
        turns = [d for d in options if d != heading]
        if turns and (heading not in options or rng.random() < turn_bias):
            heading = rng.choice(turns)
        nxt = Cell(here.x + heading[0], here.y + heading[1])
        path.append(nxt)
        cells.add(nxt)
    return Polyomino(path)


# --- family non-tiling checks ----------------------------------------------

def spaced_bars_bound(a: int, b: int) -> float:
    """Bar counts strictly above this bound are non-tilers (when a does not divide b^2)."""
    return 2 * (a + b) * (a - 1) / a


def check_spaced_bars(n: int, a: int, b: int) -> Optional[Certificate]:
    """Witness: the (a+b)-square, modulus a."""
    _require(a >= 2, "modulus a must be >= 2")
    g = make_spaced_bars(n, a, b)
    return check(make_square(a + b), a, [g])


def check_spiky(spec: SpikyLogSpec) -> Optional[Certificate]:
    """Witness: the X pentomino, modulus 2."""
    return check(make_x_pentomino(), 2, [make_spiky_log(spec)])


def check_snake(p: Polyomino) -> Optional[Certificate]:
    """Witness: the X pentomino, modulus 3."""
    if not is_snake(p):
        raise NotASnake("polyomino contains a T tetromino or a 2x2 square")
    return check(make_x_pentomino(), 3, [p])


# --- enumeration ------------------------------------------------------------

def fixed_polyominoes(size: int) -> List[Polyomino]:
    """All rookwise-connected polyominoes of ``size`` cells up to translation."""
    if size < 1:
        return []
    level = {canonical(Polyomino([(0, 0)]))}
    for _ in range(size - 1):
        nxt = set()
        for p in level:
            cells = p.cells
            for c in cells:
                for nb in neighbours(c):
                    if nb not in cells:
                        nxt.add(canonical(Polyomino(cells | {nb})))
        level = nxt
    return sorted(level, key=lambda p: sorted((c.y, c.x) for c in p))


def free_under_rotation(polys: Iterable[Polyomino]) -> List[Polyomino]:
    """Keep one representative per rotation class."""
    out = []
    seen = set()
    for p in polys:
        key = min(rotations(p), key=lambda q: sorted(q))
        if key not in seen:
            seen.add(key)
            out.append(p)
    return out

