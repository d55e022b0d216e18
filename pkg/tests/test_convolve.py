import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyconv.convolve import conv, conv_mod, is_rot90_symmetric, reduce_mod
from polyconv.families import make_dn, make_rect, make_square, make_x_pentomino
from polyconv.grid import EmptyGrid, IntGrid, Polyomino, canonical, norm1, norm_inf, rotate90

from conftest import small_grids, small_polyominoes
from oracles import naive_conv

DELTA = IntGrid({(0, 0): 1})
DOMINO = Polyomino([(0, 0), (1, 0)])


def test_conv_identity_and_zero():
    f = IntGrid({(0, 0): 3, (2, -1): -2})
    assert conv(f, DELTA) == f
    assert conv(f, IntGrid()) == IntGrid()


def test_conv_domino_square():
    expected = IntGrid(naive_conv(DOMINO, DOMINO))
    assert expected == IntGrid({(0, 0): 1, (1, 0): 2, (2, 0): 1})
    assert conv(DOMINO, DOMINO) == expected


@given(small_grids(max_cells=15), small_grids(max_cells=15))
def test_conv_matches_oracle(f, g):
    assert conv(f, g) == IntGrid(naive_conv(f, g))


def test_reduce_mod_examples():
    assert reduce_mod(IntGrid({(0, 0): 2}), 2) == IntGrid()
    assert reduce_mod(IntGrid({(0, 0): -1}), 3) == IntGrid({(0, 0): 2})
    assert reduce_mod(IntGrid({(0, 0): 7}), 5) == IntGrid({(0, 0): 2})


@pytest.mark.parametrize("n", [1, 0, -3])
def test_bad_modulus(n):
    with pytest.raises(ValueError):
        reduce_mod(DELTA, n)


@pytest.mark.parametrize("n", range(1, 12))
def test_square_against_dn_mod2(n):
    assert norm1(conv_mod(make_square(3), make_dn(n), 2)) == 6


def test_x_against_2x2():
    assert norm1(conv_mod(make_x_pentomino(), make_rect(2, 2), 2)) == 12


@given(small_grids(), st.integers(2, 9))
def test_conv_mod_delta(f, n):
    assert conv_mod(f, DELTA, n) == reduce_mod(f, n)


@settings(max_examples=150)
@given(small_grids(max_cells=10), small_grids(max_cells=10))
def test_conv_mod_is_reduced_conv(f, g):
    for n in (2, 3, 5):
        assert conv_mod(f, g, n) == reduce_mod(conv(f, g), n)


@given(small_grids(max_cells=10), small_grids(max_cells=10))
def test_l1_young_bound(f, g):
    assert norm1(conv(f, g)) <= norm1(f) * norm1(g)


def test_symmetry_examples():
    assert is_rot90_symmetric(make_x_pentomino())
    assert is_rot90_symmetric(make_square(3))
    assert is_rot90_symmetric(make_square(4))
    assert not is_rot90_symmetric(DOMINO)
    with pytest.raises(EmptyGrid):
        is_rot90_symmetric(IntGrid())


def test_symmetry_any_center():
    # pinwheel about a lattice vertex, not a cell centre
    pinwheel = Polyomino([(0, 0), (1, 0), (1, 1), (0, 1), (2, 0), (1, 2), (-1, 1), (0, -1)])
    assert is_rot90_symmetric(pinwheel)


@settings(max_examples=150)
@given(small_polyominoes(max_cells=8))
def test_rotating_g_preserves_norms_for_symmetric_f(g):
    for f in (make_square(3), make_x_pentomino(), make_square(4)):
        for n in (2, 3):
            a = conv_mod(f, rotate90(g), n)
            b = rotate90(conv_mod(f, g, n))
            assert canonical(a) == canonical(b)
            assert norm1(a) == norm1(conv_mod(f, g, n))
            assert norm_inf(a) == norm_inf(conv_mod(f, g, n))
