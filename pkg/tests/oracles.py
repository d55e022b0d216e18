"""Independent reference computations used only by the tests."""

from itertools import product


def naive_conv(f, g):
    """Dense quadruple loop over bounding boxes; shares no code with conv."""
    if not f or not g:
        return {}
    fd = {tuple(c): v for c, v in f.items()}
    gd = {tuple(c): v for c, v in g.items()}
    fx0, fx1 = min(x for x, _ in fd), max(x for x, _ in fd)
    fy0, fy1 = min(y for _, y in fd), max(y for _, y in fd)
    gx0, gx1 = min(x for x, _ in gd), max(x for x, _ in gd)
    gy0, gy1 = min(y for _, y in gd), max(y for _, y in gd)
    fw, fh = fx1 - fx0 + 1, fy1 - fy0 + 1
    gw, gh = gx1 - gx0 + 1, gy1 - gy0 + 1
    F = [[fd.get((fx0 + i, fy0 + j), 0) for j in range(fh)] for i in range(fw)]
    G = [[gd.get((gx0 + i, gy0 + j), 0) for j in range(gh)] for i in range(gw)]
    out = {}
    for n in range(fw + gw - 1):
        for m in range(fh + gh - 1):
            s = 0
            for k in range(max(0, n - gw + 1), min(fw, n + 1)):
                for l in range(max(0, m - gh + 1), min(fh, m + 1)):
                    s += F[k][l] * G[n - k][m - l]
            if s:
                out[(fx0 + gx0 + n, fy0 + gy0 + m)] = s
    return out


def brute_rotations(cells):
    """Canonical cell tuples of the four quarter turns, via explicit
    square-corner geometry: the square [x,x+1]x[y,y+1] turned about the
    origin has lower-left corner (-y-1, x)."""
    shapes = []
    cur = [tuple(c) for c in cells]
    for _ in range(4):
        mx = min(x for x, _ in cur)
        my = min(y for _, y in cur)
        shapes.append(tuple(sorted((x - mx, y - my) for x, y in cur)))
        cur = [(-y - 1, x) for x, y in cur]
    return shapes


def brute_torus_placements(width, height, cells):
    """Legal (shape, offset) pairs: one per distinct rotation class."""
    seen, count = set(), 0
    for shape in brute_rotations(cells):
        if shape in seen:
            continue
        seen.add(shape)
        for ox, oy in product(range(width), range(height)):
            wrapped = {((x + ox) % width, (y + oy) % height) for x, y in shape}
            if len(wrapped) == len(shape):
                count += 1
    return count


def brute_tiles_torus(width, height, tiles):
    """First-empty-cell backtracking over plain sets."""
    pls = set()
    for t in tiles:
        for shape in brute_rotations(t):
            for ox, oy in product(range(width), range(height)):
                placed = frozenset(((x + ox) % width, (y + oy) % height) for x, y in shape)
                if len(placed) == len(shape):
                    pls.add(placed)
    by_cell = {}
    for p in sorted(pls, key=sorted):
        for c in p:
            by_cell.setdefault(c, []).append(p)
    order = [(x, y) for y in range(height) for x in range(width)]
    covered = set()

    def rec(i):
        while i < len(order) and order[i] in covered:
            i += 1
        if i == len(order):
            return True
        for p in by_cell.get(order[i], []):
            if covered.isdisjoint(p):
                covered.update(p)
                if rec(i + 1):
                    return True
                covered.difference_update(p)
        return False

    return rec(0)
