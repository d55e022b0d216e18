"""Exact convolution of integer grids and its reduction modulo n."""

from __future__ import annotations

from typing import Dict

from .grid import Cell, EmptyGrid, IntGrid, canonical, rotate90


def check_modulus(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise ValueError(f"modulus must be an integer >= 2, got {n!r}")
    return n


def conv(f: IntGrid, g: IntGrid) -> IntGrid:
    """h(p) = sum over q of f(q) g(p - q), looping over the two supports."""
    if len(f) > len(g):
        f, g = g, f
    out: Dict[Cell, int] = {}
    g_items = list(g.items())
    for (fx, fy), fv in f.items():
        for (gx, gy), gv in g_items:
            key = (fx + gx, fy + gy)
            out[key] = out.get(key, 0) + fv * gv
    return IntGrid._wrap({Cell(*k): v for k, v in out.items() if v})


def reduce_mod(h: IntGrid, n: int) -> IntGrid:
    """Replace each value by its residue in 0..n-1, dropping zeros."""
    check_modulus(n)
    out = {}
    for c, v in h.items():
        r = v % n
        if r:
            out[c] = r
    return IntGrid._wrap(out)


def conv_mod(f: IntGrid, g: IntGrid, n: int) -> IntGrid:
    check_modulus(n)
    if len(f) > len(g):
        f, g = g, f
    out: Dict[tuple, int] = {}
    g_items = list(g.items())
    for (fx, fy), fv in f.items():
        for (gx, gy), gv in g_items:
            key = (fx + gx, fy + gy)
            out[key] = out.get(key, 0) + fv * gv
    return IntGrid._wrap({Cell(*k): r for k, v in out.items() if (r := v % n)})


def is_rot90_symmetric(f: IntGrid) -> bool:
    """True when a quarter turn maps ``f`` onto a translate of itself."""
    if not f:
        raise EmptyGrid("symmetry test on an empty grid")
    return canonical(rotate90(f)) == canonical(f)
