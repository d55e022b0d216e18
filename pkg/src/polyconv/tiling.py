"""Tilings of a torus by polyominoes under translation and rotation.

Exact tilings are found with Algorithm X over dancing links (array-backed).
Signed tilings are only summed and checked; the one explicit construction
provided is the 24 x 12 torus signed tiling by D_4 copies.
"""

from __future__ import annotations

import math
import sys
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .grid import Cell, IntGrid, Polyomino, canonical, rotate

_ID_CHARS = "0123456789abcdefghijklmnopqrstuvwxyz" "ABCDEFGHIJKLMNOPQRSTUVWXYZ"


class TilingError(Exception):
    pass


class BudgetExceeded(TilingError):
    """The search stopped before it was exhaustive; nothing was proved."""


class ConstructionFailed(TilingError):
    pass


@dataclass(frozen=True)
class Torus:
    width: int
    height: int

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError(f"torus dimensions must be positive, got {self.width}x{self.height}")

    @property
    def area(self) -> int:
        return self.width * self.height

    def wrap(self, x: int, y: int) -> Cell:
        return Cell(x % self.width, y % self.height)

    def index(self, c: Tuple[int, int]) -> int:
        # (y, x) scan order
        x, y = self.wrap(*c)
        return y * self.width + x

    def cells(self):
        return [Cell(x, y) for y in range(self.height) for x in range(self.width)]


@dataclass(frozen=True)
class Placement:
    tile_index: int
    rotation: int
    offset: Cell

    def cells(self, tiles: Sequence[IntGrid]) -> List[Cell]:
        """Plane cells covered, before wrapping."""
        shape = canonical(rotate(tiles[self.tile_index], self.rotation))
        dx, dy = self.offset
        return [Cell(c.x + dx, c.y + dy) for c in shape]

    def torus_cells(self, torus: Torus, tiles: Sequence[IntGrid]) -> List[Cell]:
        return [torus.wrap(*c) for c in self.cells(tiles)]


@dataclass(frozen=True)
class SignedPlacement:
    placement: Placement
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")


@dataclass
class TilingSolution:
    torus: Torus
    tiles: List[Polyomino]
    placements: List[Placement] = field(default_factory=list)


def distinct_rotations(tile: IntGrid) -> List[int]:
    """Quarter-turn counts giving pairwise non-translate-equivalent shapes."""
    seen = []
    out = []
    for r in range(4):
        shape = canonical(rotate(tile, r))
        if shape not in seen:
            seen.append(shape)
            out.append(r)
    return out


def enumerate_placements(torus: Torus, tiles: Sequence[IntGrid]) -> List[Placement]:
    """Every legal placement; wraps that land a tile on itself are dropped."""
    out = []
    for ti, tile in enumerate(tiles):
        for r in distinct_rotations(tile):
            shape = list(canonical(rotate(tile, r)))
            for oy in range(torus.height):
                for ox in range(torus.width):
                    wrapped = {torus.wrap(c.x + ox, c.y + oy) for c in shape}
                    if len(wrapped) == len(shape):
                        out.append(Placement(ti, r, Cell(ox, oy)))
    return out


def verify_tiling(solution: TilingSolution) -> bool:
    torus = solution.torus
    counts = [0] * torus.area
    for p in solution.placements:
        for c in p.torus_cells(torus, solution.tiles):
            counts[torus.index(c)] += 1
    return all(k == 1 for k in counts)


class _DLX:
    """Knuth's dancing links over parallel int arrays."""

    def __init__(self, ncols: int, rows: Sequence[Sequence[int]]):
        n = ncols + 1
        self.L = list(range(-1, n - 1))
        self.L[0] = ncols
        self.R = list(range(1, n + 1))
        self.R[ncols] = 0
        self.U = list(range(n))
        self.D = list(range(n))
        self.C = list(range(n))
        self.S = [0] * n
        self.row_of = [-1] * n
        for rid, cols in enumerate(rows):
            first = None
            for col in cols:
                c = col + 1
                node = len(self.C)
                self.C.append(c)
                self.row_of.append(rid)
                self.U.append(self.U[c])
                self.D.append(c)
                self.D[self.U[c]] = node
                self.U[c] = node
                self.S[c] += 1
                if first is None:
                    first = node
                    self.L.append(node)
                    self.R.append(node)
                else:
                    self.L.append(self.L[first])
                    self.R.append(first)
                    self.R[self.L[first]] = node
                    self.L[first] = node

    def cover(self, c):
        L, R, U, D, C, S = self.L, self.R, self.U, self.D, self.C, self.S
        R[L[c]] = R[c]
        L[R[c]] = L[c]
        i = D[c]
        while i != c:
            j = R[i]
            while j != i:
                D[U[j]] = D[j]
                U[D[j]] = U[j]
                S[C[j]] -= 1
                j = R[j]
            i = D[i]

    def uncover(self, c):
        L, R, U, D, C, S = self.L, self.R, self.U, self.D, self.C, self.S
        i = U[c]
        while i != c:
            j = L[i]
            while j != i:
                S[C[j]] += 1
                D[U[j]] = j
                U[D[j]] = j
                j = L[j]
            i = U[i]
        R[L[c]] = c
        L[R[c]] = c

    def search(self, deadline: Optional[float], node_limit: Optional[int] = None):
        """First exact cover in deterministic order, or None if there is none.

        Raises BudgetExceeded when the deadline or node limit is hit.
        """
        L, R, D, C, S = self.L, self.R, self.D, self.C, self.S
        chosen: List[int] = []
        nodes = 0

        def choose():
            c = R[0]
            best, size = c, S[c]
            while c != 0 and size > 0:
                if S[c] < size:
                    best, size = c, S[c]
                c = R[c]
            return best

        def rec():
            nonlocal nodes
            if R[0] == 0:
                return True
            nodes += 1
            if nodes & 1023 == 0:
                if deadline is not None and time.monotonic() > deadline:
                    raise BudgetExceeded(f"time budget exhausted after {nodes} search nodes")
            if node_limit is not None and nodes > node_limit:
                raise BudgetExceeded(f"node limit {node_limit} exhausted")
            c = choose()
            if S[c] == 0:
                return False
            self.cover(c)
            r = D[c]
            while r != c:
                chosen.append(r)
                j = R[r]
                while j != r:
                    self.cover(C[j])
                    j = R[j]
                if rec():
                    return True
                j = L[r]
                while j != r:
                    self.uncover(C[j])
                    j = L[j]
                chosen.pop()
                r = D[r]
            self.uncover(c)
            return False

        self.nodes = 0
        limit = sys.getrecursionlimit()
        sys.setrecursionlimit(max(limit, len(self.S) + 200))
        try:
            found = rec()
        finally:
            sys.setrecursionlimit(limit)
            self.nodes = nodes
        if not found:
            return None
        return [self.row_of[r] for r in chosen]


def _dedup_rows(torus: Torus, tiles, placements):
    rows, kept, seen = [], [], set()
    for p in placements:
        key = tuple(sorted(torus.index(c) for c in p.cells(tiles)))
        if key not in seen:
            seen.add(key)
            kept.append(p)
            rows.append(key)
    return kept, rows


def cyclic_subgroups(torus: Torus) -> List[Tuple[Cell, int]]:
    """One generator per nontrivial cyclic translation subgroup, with its
    order, largest order first then by generator in (y, x) order."""
    W, H = torus.width, torus.height
    seen = set()
    out = []
    for vy in range(H):
        for vx in range(W):
            if vx == 0 and vy == 0:
                continue
            orbit = frozenset(torus.wrap(k * vx, k * vy)
                              for k in range(math.lcm(W // math.gcd(vx, W), H // math.gcd(vy, H))))
            if orbit in seen:
                continue
            seen.add(orbit)
            out.append((Cell(vx, vy), len(orbit)))
    out.sort(key=lambda item: (-item[1], item[0].y, item[0].x))
    return out


def _solve_invariant(torus: Torus, tiles, placements, rows, v: Cell, order: int,
                     deadline, node_limit) -> Optional[List[Placement]]:
    """Exact cover restricted to tilings invariant under translation by ``v``."""
    area = torus.area
    W = torus.width

    def move(i, k):
        return torus.index((i % W + k * v.x, i // W + k * v.y))

    orbit_of = [-1] * area
    n_orbits = 0
    for i in range(area):
        if orbit_of[i] < 0:
            for k in range(order):
                orbit_of[move(i, k)] = n_orbits
            n_orbits += 1
    q_rows, q_src, seen = [], [], set()
    for idx, cols in enumerate(rows):
        orbit_cols = {orbit_of[i] for i in cols}
        if len(orbit_cols) != len(cols):
            continue  # translates of this placement overlap
        key = min(tuple(sorted(move(i, k) for i in cols)) for k in range(order))
        if key in seen:
            continue
        seen.add(key)
        q_rows.append(sorted(orbit_cols))
        q_src.append(idx)
    try:
        picked = _DLX(n_orbits, q_rows).search(deadline, node_limit)
    except BudgetExceeded:
        if deadline is not None and time.monotonic() > deadline:
            raise
        return None
    if picked is None:
        return None
    out = []
    for qi in picked:
        p = placements[q_src[qi]]
        for k in range(order):
            out.append(Placement(p.tile_index, p.rotation, torus.wrap(p.offset.x + k * v.x, p.offset.y + k * v.y)))
    return out


def solve_exact_cover(torus: Torus, tiles: Sequence[IntGrid], time_budget: Optional[float] = None,
                      node_limit: Optional[int] = None, symmetric_first: bool = True,
                      symmetric_node_limit: int = 200_000) -> Optional[TilingSolution]:
    """Tile ``torus`` exactly with rotated translates of ``tiles``.

    Returns a verified solution, or None when no tiling exists (the search
    was exhaustive).  Raises BudgetExceeded when ``time_budget`` seconds or
    ``node_limit`` search nodes run out first.

    With ``symmetric_first`` the solver first looks for tilings invariant
    under a cyclic group of torus translations, one group at a time, each
    search capped at ``symmetric_node_limit`` nodes.  Such tilings live on a
    much smaller quotient problem.  Only the final unrestricted search can
    prove that no tiling exists.
    """
    tiles = [t if isinstance(t, Polyomino) else t.as_polyomino() for t in tiles]
    if not tiles:
        raise ValueError("no prototiles given")
    areas = [len(t) for t in tiles]
    if 0 in areas:
        raise ValueError("empty prototile")
    if torus.area % math.gcd(*areas):
        return None
    placements, rows = _dedup_rows(torus, tiles, enumerate_placements(torus, tiles))
    deadline = None if time_budget is None else time.monotonic() + time_budget

    def check_clock():
        if deadline is not None and time.monotonic() > deadline:
            raise BudgetExceeded(f"time budget of {time_budget}s exhausted")

    chosen = None
    if symmetric_first:
        for v, order in cyclic_subgroups(torus):
            if order * min(areas) > torus.area:
                continue
            check_clock()
            chosen = _solve_invariant(torus, tiles, placements, rows, v, order, deadline, symmetric_node_limit)
            if chosen is not None:
                break
    if chosen is None:
        check_clock()
        picked = _DLX(torus.area, rows).search(deadline, node_limit)
        if picked is None:
            return None
        chosen = [placements[i] for i in picked]
    solution = TilingSolution(torus, list(tiles),
                              sorted(chosen, key=lambda p: (p.offset.y, p.offset.x, p.tile_index, p.rotation)))
    if not verify_tiling(solution):
        raise AssertionError("solver produced an invalid tiling")
    return solution


def render_solution(solution: TilingSolution) -> str:
    """Torus picture with each cell labelled by its placement id mod 62."""
    torus = solution.torus
    label = [["?"] * torus.width for _ in range(torus.height)]
    for pid, p in enumerate(solution.placements):
        ch = _ID_CHARS[pid % len(_ID_CHARS)]
        for c in p.torus_cells(torus, solution.tiles):
            label[c.y][c.x] = ch
    return "\n".join("".join(row) for row in reversed(label)) + "\n"


def format_placements(placements: Sequence) -> str:
    lines = []
    for p in placements:
        if isinstance(p, SignedPlacement):
            q = p.placement
            lines.append(f"{q.tile_index} {q.rotation} {q.offset.x} {q.offset.y} {p.sign:+d}")
        else:
            lines.append(f"{p.tile_index} {p.rotation} {p.offset.x} {p.offset.y}")
    return "\n".join(lines) + ("\n" if lines else "")


def parse_placements(text: str) -> list:
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        parts = line.split()
        if not parts:
            continue
        if len(parts) not in (4, 5):
            raise ValueError(f"line {lineno}: expected 'tile_index rotation dx dy [sign]'")
        ti, r, dx, dy = (int(s) for s in parts[:4])
        p = Placement(ti, r % 4, Cell(dx, dy))
        out.append(SignedPlacement(p, int(parts[4])) if len(parts) == 5 else p)
    return out


# --- signed tilings ---------------------------------------------------------

def signed_sum(torus: Torus, placements: Sequence[SignedPlacement], tiles: Sequence[IntGrid]) -> IntGrid:
    """Coverage function sum(sign * indicator) on the torus cells."""
    acc: Dict[Cell, int] = {}
    for sp in placements:
        for c in sp.placement.torus_cells(torus, tiles):
            acc[c] = acc.get(c, 0) + sp.sign
    return IntGrid(acc)


def _place(tiles: Sequence[IntGrid], tile_index: int, cells) -> Placement:
    """Placement whose plane cells are exactly ``cells``."""
    target = Polyomino(cells)
    min_x, min_y, _, _ = target.bbox()
    shape = canonical(target)
    for r in range(4):
        if canonical(rotate(tiles[tile_index], r)) == shape:
            return Placement(tile_index, r, Cell(min_x, min_y))
    raise ConstructionFailed("cell set is not a rotation of the prototile")


def _rotate_cw(cells):
    return [(y, -1 - x) for x, y in cells]


def _shifted(placements, dx, dy, torus: Optional[Torus] = None):
    out = []
    for sp in placements:
        x, y = sp.placement.offset.x + dx, sp.placement.offset.y + dy
        offset = torus.wrap(x, y) if torus else Cell(x, y)
        out.append(SignedPlacement(Placement(sp.placement.tile_index, sp.placement.rotation, offset), sp.sign))
    return out


def d4_signed_tiling_block(tiles: Sequence[IntGrid]) -> List[SignedPlacement]:
    """One of the three identical blocks of the 24 x 12 construction.

    Twelve horizontal D_4 copies stacked in rows 0..11 leave four 2-wide
    columns.  A "mover" (12 positive and 12 negative vertical D_4 copies)
    on each of columns 3, 4, 9, 10 carries those columns up by 12 rows.
    """
    d4 = tiles[0]
    base = sorted(canonical(d4))
    block = [SignedPlacement(_place(tiles, 0, [(x, y + row) for x, y in base]))
             for row in range(12)]

    # pair: +D4 at x=0 and -D4 at x=3 leaves +1 on x=0,1 and -1 on x=12,13;
    # six pairs two apart give +1 on 0..11 and -1 on 12..23
    mover = []
    for j in range(6):
        for dx, sign in ((2 * j, 1), (2 * j + 3, -1)):
            cells = _rotate_cw([(x + dx, y) for x, y in base])
            mover.append(SignedPlacement(_place(tiles, 0, cells), sign))
    # rotated mover occupies column 0, +1 on rows -12..-1 and -1 on rows -24..-13;
    # re-anchor so it adds rows 12..23 and removes rows 0..11
    mover = _shifted(mover, 0, 24)
    for col in (3, 4, 9, 10):
        block.extend(_shifted(mover, col, 0))
    return block


def build_signed_tiling_24x12(time_budget: Optional[float] = None) -> Tuple[Torus, List[Polyomino], List[SignedPlacement]]:
    """Signed tiling of the 12-wide, 24-tall torus by D_4 copies.

    The three copies of the block are positioned by searching offsets
    (horizontal 0..11, vertical 0..23 each) in lexicographic order and
    keeping the first assignment whose signed sum is identically 1.
    """
    from .families import make_spaced_bars

    torus = Torus(12, 24)
    tiles = [make_spaced_bars(4, 2, 1)]
    block = d4_signed_tiling_block(tiles)
    base = signed_sum(torus, block, tiles)

    offsets = [(dx, dy) for dx in range(torus.width) for dy in range(torus.height)]
    shifted = {}
    for dx, dy in offsets:
        shifted[(dx, dy)] = {torus.wrap(c.x + dx, c.y + dy): v for c, v in base.items()}

    deadline = None if time_budget is None else time.monotonic() + time_budget
    target = {c: 1 for c in torus.cells()}

    def fits(acc, grid):
        return all(acc.get(c, 0) + v <= 1 and acc.get(c, 0) + v >= 0 for c, v in grid.items())

    def search(acc, chosen):
        if len(chosen) == 3:
            return chosen if acc == target else None
        for off in offsets:
            if deadline is not None and time.monotonic() > deadline:
                raise BudgetExceeded("offset search ran out of time")
            grid = shifted[off]
            if not fits(acc, grid):
                continue
            nxt = dict(acc)
            for c, v in grid.items():
                nxt[c] = nxt.get(c, 0) + v
            found = search({c: v for c, v in nxt.items() if v}, chosen + [off])
            if found:
                return found
        return None

    if any(v not in (0, 1) for v in base.values()):
        raise ConstructionFailed("block is not a 0/1 figure")
    chosen = search({}, [])
    if chosen is None:
        raise ConstructionFailed("no offset assignment gives a signed sum identically 1")
    placements = []
    for dx, dy in chosen:
        placements.extend(_shifted(block, dx, dy, torus))
    total = signed_sum(torus, placements, tiles)
    if total != IntGrid(target):
        raise ConstructionFailed("assembled signed tiling does not sum to 1")
    return torus, tiles, placements
