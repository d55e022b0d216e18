"""Convolution certificates that a set of polyominoes cannot tile the plane.

Given a polyomino ``f`` with quarter-turn symmetry and a modulus ``n``, a tile
``g`` is certified a non-tiler when either

    |f *_n g|_1   <  r * |g|          (L1), or
    |f *_n g|_inf <  sgn(r) * |g|     (LINF),

with ``r`` the residue of ``|f|`` mod ``n``.  The test is one-directional:
failing it says nothing about whether ``g`` tiles.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .convolve import check_modulus, conv_mod, is_rot90_symmetric
from .grid import EmptyGrid, GridError, IntGrid, Polyomino, norm1, norm_inf, parse_ascii, render_ascii

L1 = "L1"
LINF = "LINF"


class NotSymmetric(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


class CertificateFormatError(ValueError):
    pass


def residue(m: int, n: int) -> int:
    check_modulus(n)
    return m % n


@dataclass(frozen=True)
class TileNorms:
    area: int
    l1: int
    linf: int


@dataclass(frozen=True)
class Certificate:
    witness_f: Polyomino
    modulus_n: int
    norm_kind: str
    lhs: int
    rhs: int
    tiles: Tuple[Polyomino, ...]
    per_tile: Tuple[TileNorms, ...]

    def to_text(self) -> str:
        lines = ["BEGIN CERTIFICATE",
                 f"modulus: {self.modulus_n}",
                 f"norm: {self.norm_kind}",
                 f"lhs: {self.lhs}",
                 f"rhs: {self.rhs}",
                 "witness:"]
        lines += render_ascii(self.witness_f).splitlines()
        for i, (g, t) in enumerate(zip(self.tiles, self.per_tile)):
            lines.append(f"tile {i}: area={t.area} l1={t.l1} linf={t.linf}")
            lines += render_ascii(g).splitlines()
        lines.append("END CERTIFICATE")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Certificate":
        """Parse a block written by ``to_text``.  Numbers are taken as stated;
        call ``verify_certificate`` to recompute them."""
        lines = text.splitlines()
        try:
            start = next(i for i, s in enumerate(lines) if s.strip() == "BEGIN CERTIFICATE")
            end = next(i for i, s in enumerate(lines) if s.strip() == "END CERTIFICATE" and i > start)
        except StopIteration:
            raise CertificateFormatError("no certificate block found") from None
        body = lines[start + 1:end]
        fields = {}
        sections: List[Tuple[str, List[str]]] = []
        for line in body:
            m = re.fullmatch(r"(modulus|norm|lhs|rhs): *(\S+)", line.strip())
            if m and not sections:
                fields[m.group(1)] = m.group(2)
            elif line.strip() == "witness:" or re.match(r"tile \d+:", line):
                sections.append((line, []))
            elif sections:
                sections[-1][1].append(line)
            else:
                raise CertificateFormatError(f"unexpected line {line!r}")
        missing = {"modulus", "norm", "lhs", "rhs"} - fields.keys()
        if missing or not sections or sections[0][0].strip() != "witness:":
            raise CertificateFormatError(f"incomplete certificate (missing {sorted(missing) or 'witness'})")
        if fields["norm"] not in (L1, LINF):
            raise CertificateFormatError(f"unknown norm kind {fields['norm']!r}")
        try:
            witness = parse_ascii("\n".join(sections[0][1])).as_polyomino()
            tiles, per_tile = [], []
            for head, rows in sections[1:]:
                m = re.fullmatch(r"tile \d+: area=(\d+) l1=(\d+) linf=(\d+)", head.strip())
                if not m:
                    raise CertificateFormatError(f"bad tile header {head!r}")
                per_tile.append(TileNorms(*(int(v) for v in m.groups())))
                tiles.append(parse_ascii("\n".join(rows)).as_polyomino())
            return cls(witness, int(fields["modulus"]), fields["norm"], int(fields["lhs"]),
                       int(fields["rhs"]), tuple(tiles), tuple(per_tile))
        except (GridError, ValueError) as exc:
            if isinstance(exc, CertificateFormatError):
                raise
            raise CertificateFormatError(str(exc)) from exc


def tile_norms(f: IntGrid, n: int, g: IntGrid) -> TileNorms:
    h = conv_mod(f, g, n)
    return TileNorms(len(g), norm1(h), norm_inf(h))


def _bounds(f_residue: int, norms: TileNorms) -> dict:
    return {
        L1: (norms.l1, f_residue * norms.area),
        LINF: (norms.linf, (1 if f_residue else 0) * norms.area),
    }


def _as_polyomino(g: IntGrid) -> Polyomino:
    if not g:
        raise EmptyGrid("empty polyomino")
    return g if isinstance(g, Polyomino) else g.as_polyomino()


def check(f: IntGrid, n: int, tiles: Sequence[IntGrid]) -> Optional[Certificate]:
    """Return a certificate that ``tiles`` cannot tile the plane, or None.

    One norm kind has to work for every tile; L1 is tried first.  The
    reported lhs/rhs pair is the one with the smallest margin ``rhs - lhs``
    over the tiles (first tile on ties).
    """
    check_modulus(n)
    f = _as_polyomino(f)
    if not tiles:
        raise ValueError("at least one tile is required")
    tiles = tuple(_as_polyomino(g) for g in tiles)
    if not is_rot90_symmetric(f):
        raise NotSymmetric("witness is not symmetric under quarter turns")
    r = residue(len(f), n)
    if r == 0:
        return None
    norms = tuple(tile_norms(f, n, g) for g in tiles)
    for kind in (L1, LINF):
        pairs = [_bounds(r, t)[kind] for t in norms]
        if all(lhs < rhs for lhs, rhs in pairs):
            lhs, rhs = min(pairs, key=lambda p: p[1] - p[0])
            return Certificate(f, n, kind, lhs, rhs, tiles, norms)
    return None


def verify_certificate(cert: Certificate) -> bool:
    """Recompute every number in ``cert`` from its witness, modulus and tiles."""
    try:
        f = cert.witness_f
        n = check_modulus(cert.modulus_n)
        if not f or not is_rot90_symmetric(f) or not cert.tiles:
            return False
        if len(cert.tiles) != len(cert.per_tile):
            return False
        r = residue(len(f), n)
        pairs = []
        for g, stated in zip(cert.tiles, cert.per_tile):
            actual = tile_norms(f, n, g)
            if actual != stated:
                return False
            pairs.append(_bounds(r, actual)[cert.norm_kind])
    except (ValueError, KeyError):
        return False
    if (cert.lhs, cert.rhs) not in pairs:
        return False
    return all(lhs < rhs for lhs, rhs in pairs)


def default_catalog(max_square: int = 7, max_mod: int = 6) -> List[Tuple[Polyomino, int]]:
    """Squares of side 2..max_square, then the X pentomino, each with
    moduli 2..max_mod.  A 1x1 square is left out: its convolution is the
    tile itself, so it can never certify."""
    from .families import make_square, make_x_pentomino

    cat = [(make_square(k), n) for k in range(2, max_square + 1) for n in range(2, max_mod + 1)]
    cat += [(make_x_pentomino(), n) for n in range(2, max_mod + 1)]
    return cat


def search_witness(g, catalog: Optional[Sequence[Tuple[IntGrid, int]]] = None,
                   budget: Optional[int] = None) -> Optional[Certificate]:
    """First catalog entry (in order) that certifies ``g``; None means
    inconclusive.  ``g`` may be a single polyomino or a list of prototiles.

    ``budget`` caps the number of catalog entries tried; running out raises
    BudgetExceeded.
    """
    tiles = list(g) if isinstance(g, (list, tuple)) else [g]
    if catalog is None:
        catalog = default_catalog()
    for step, (f, n) in enumerate(catalog):
        if budget is not None and step >= budget:
            raise BudgetExceeded(f"witness search stopped after {budget} catalog entries")
        cert = check(f, n, tiles)
        if cert is not None:
            return cert
    return None
