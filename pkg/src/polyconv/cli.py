"""Command line front end.

Exit codes: 0 definitive answer, 1 inconclusive, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from typing import List, Optional

from . import criterion, families, tiling
from .convolve import conv, conv_mod, is_rot90_symmetric
from .grid import GridError, IntGrid, diam, is_rookwise_connected, norm1, norm_inf, parse_ascii, render_ascii

EXIT_OK, EXIT_INCONCLUSIVE, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _kv(body: str) -> dict:
    out = {}
    for part in filter(None, body.split(",")):
        key, sep, val = part.partition("=")
        if not sep:
            raise UsageError(f"expected key=value, got {part!r}")
        try:
            out[key.strip()] = int(val)
        except ValueError:
            raise UsageError(f"{key}: not an integer: {val!r}") from None
    return out


def parse_shape(text: str) -> IntGrid:
    """A path to a shape file, or a family shorthand such as
    ``bars:n=4,a=2,b=1``, ``square:3``, ``rect:3x4``, ``d:4`` or ``x``."""
    if os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            return parse_ascii(fh.read())
    name, _, body = text.partition(":")
    name = name.strip().lower()
    try:
        if name == "bars":
            kv = _kv(body)
            unknown = set(kv) - {"n", "a", "b"}
            if unknown:
                raise UsageError(f"bars: unknown keys {sorted(unknown)}")
            return families.make_spaced_bars(kv.get("n", 1), kv.get("a", 2), kv.get("b", 1))
        if name in ("d", "dn"):
            return families.make_dn(int(body))
        if name == "square":
            return families.make_square(int(body))
        if name == "rect":
            m = re.fullmatch(r"\s*(\d+)\s*[xX]\s*(\d+)\s*", body)
            if not m:
                raise UsageError(f"rect expects WxH, got {body!r}")
            return families.make_rect(int(m.group(1)), int(m.group(2)))
        if name == "x" and not body:
            return families.make_x_pentomino()
        if name == "u" and not body:
            return families.U_PENTOMINO
        if name == "domino" and not body:
            return families.make_rect(2, 1)
    except ValueError as exc:
        if isinstance(exc, families.InvalidSpec):
            raise
        raise UsageError(f"bad shape {text!r}: {exc}") from None
    raise UsageError(f"not a file or known shape: {text!r}")


def _polyomino(text: str):
    g = parse_shape(text)
    if not g:
        raise UsageError(f"shape {text!r} is empty")
    if not g.is_polyomino():
        raise UsageError(f"shape {text!r} is not a 0/1 polyomino")
    return g.as_polyomino()


def _torus(text: str) -> tiling.Torus:
    m = re.fullmatch(r"(\d+)[xX](\d+)", text)
    if not m:
        raise UsageError(f"--torus expects WxH, got {text!r}")
    return tiling.Torus(int(m.group(1)), int(m.group(2)))


def _describe(g: IntGrid) -> List[str]:
    lines = [f"norm1: {norm1(g)}", f"norm_inf: {norm_inf(g)}"]
    if g:
        lines.append(f"diam: {diam(g)}")
        if g.is_polyomino():
            p = g.as_polyomino()
            lines.append(f"rookwise_connected: {str(is_rookwise_connected(p)).lower()}")
            lines.append(f"rot90_symmetric: {str(is_rot90_symmetric(p)).lower()}")
            snake = families.is_snake(p)
            lines.append(f"snake: {str(snake).lower()}")
            if snake:
                lines.append(f"u_turns: {families.count_u_turns(p)}")
    return lines


def cmd_conv(args, out) -> int:
    f, g = parse_shape(args.f), parse_shape(args.g)
    h = conv(f, g) if args.mod is None else conv_mod(f, g, args.mod)
    out.write(render_ascii(h))
    out.write(f"norm1: {norm1(h)}\nnorm_inf: {norm_inf(h)}\n")
    return EXIT_OK


def _emit_certificate(cert, out) -> int:
    if cert is None:
        out.write("inconclusive: no certificate (this does not mean the tiles tile the plane)\n")
        return EXIT_INCONCLUSIVE
    out.write(f"certified non-tiler: {cert.norm_kind} lhs={cert.lhs} rhs={cert.rhs}\n")
    out.write(cert.to_text())
    return EXIT_OK


def cmd_check(args, out) -> int:
    f = _polyomino(args.witness)
    tiles = [_polyomino(t) for t in args.tiles]
    return _emit_certificate(criterion.check(f, args.mod, tiles), out)


def cmd_witness(args, out) -> int:
    tiles = [_polyomino(t) for t in args.tiles]
    catalog = criterion.default_catalog(args.max_square, args.max_mod)
    try:
        cert = criterion.search_witness(tiles, catalog, args.budget)
    except criterion.BudgetExceeded as exc:
        out.write(f"inconclusive: {exc}\n")
        return EXIT_INCONCLUSIVE
    return _emit_certificate(cert, out)


def cmd_verify(args, out) -> int:
    with open(args.file, encoding="utf-8") as fh:
        cert = criterion.Certificate.from_text(fh.read())
    if criterion.verify_certificate(cert):
        out.write("certificate verified\n")
        return EXIT_OK
    out.write("certificate REJECTED\n")
    return EXIT_INCONCLUSIVE


def cmd_family(args, out) -> int:
    g = _polyomino(args.spec)
    out.write(render_ascii(g))
    out.write("\n".join(_describe(g)) + "\n")
    return EXIT_OK


def cmd_info(args, out) -> int:
    g = parse_shape(args.shape)
    out.write(render_ascii(g))
    out.write("\n".join(_describe(g)) + "\n")
    return EXIT_OK


def cmd_tile(args, out) -> int:
    torus = _torus(args.torus)
    tiles = [_polyomino(t) for t in args.tiles]
    try:
        sol = tiling.solve_exact_cover(torus, tiles, time_budget=args.budget)
    except tiling.BudgetExceeded as exc:
        out.write(f"inconclusive: {exc}\n")
        return EXIT_INCONCLUSIVE
    if sol is None:
        out.write(f"unsatisfiable: no tiling of the {torus.width}x{torus.height} torus exists\n")
        return EXIT_OK
    out.write(f"tiling found: {len(sol.placements)} placements on the {torus.width}x{torus.height} torus "
              f"(verified: {str(tiling.verify_tiling(sol)).lower()})\n")
    out.write(tiling.format_placements(sol.placements))
    out.write(tiling.render_solution(sol))
    return EXIT_OK


def cmd_signed_demo(args, out) -> int:
    torus, tiles, placements = tiling.build_signed_tiling_24x12()
    total = tiling.signed_sum(torus, placements, tiles)
    ones = sum(1 for c in torus.cells() if total[c] == 1)
    pos = sum(1 for p in placements if p.sign > 0)
    out.write(f"{len(placements)} signed D_4 placements ({pos} positive, {len(placements) - pos} negative) "
              f"on the torus of {torus.height} rows by {torus.width} columns\n")
    out.write(f"signed sum ≡ 1 on {ones}/{torus.area} cells\n")
    if args.placements:
        out.write(tiling.format_placements(placements))
    return EXIT_OK if ones == torus.area and len(total) == torus.area else EXIT_INCONCLUSIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polyconv", description="Convolution non-tiling certificates for polyominoes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("conv", help="convolve two shapes, optionally mod n")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("--mod", type=int)
    p.set_defaults(func=cmd_conv)

    p = sub.add_parser("check", help="test one witness and modulus against tiles")
    p.add_argument("--witness", required=True)
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("tiles", nargs="+")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("witness", help="search the default witness catalog")
    p.add_argument("tiles", nargs="+")
    p.add_argument("--max-square", type=int, default=7)
    p.add_argument("--max-mod", type=int, default=6)
    p.add_argument("--budget", type=int, help="maximum number of catalog entries to try")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", help="re-check a saved certificate block")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("family", help="render a family member and its properties")
    p.add_argument("spec")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("tile", help="exact tiling of a torus")
    p.add_argument("--torus", required=True)
    p.add_argument("--budget", type=float, help="time budget in seconds")
    p.add_argument("tiles", nargs="+")
    p.set_defaults(func=cmd_tile)

    p = sub.add_parser("signed-demo", help="build and verify the 24x12 signed tiling by D_4")
    p.add_argument("--placements", action="store_true", help="also print the signed placements")
    p.set_defaults(func=cmd_signed_demo)

    p = sub.add_parser("info", help="norms, diameter, connectivity and symmetry of a shape")
    p.add_argument("shape")
    p.set_defaults(func=cmd_info)
    return parser


def run(argv: Optional[List[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    try:
        return args.func(args, out)
    except (UsageError, GridError, ValueError, OSError) as exc:
        sys.stderr.write(f"polyconv: error: {exc}\n")
        return EXIT_ERROR


def main() -> None:
    sys.exit(run())
