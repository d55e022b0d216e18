"""Convolution criterion for polyominoes that cannot tile the plane."""

from .convolve import conv, conv_mod, is_rot90_symmetric, reduce_mod
from .criterion import Certificate, check, residue, search_witness, verify_certificate
from .grid import (Cell, EmptyGrid, IntGrid, ParseError, Polyomino, canonical, diam, is_rookwise_connected,
                   norm1, norm_inf, parse_ascii, reflect, render_ascii, rotate90, translate)

__version__ = "0.1.0"
