import io
import subprocess
import sys

import pytest

from polyconv.cli import parse_shape, run
from polyconv.criterion import Certificate, verify_certificate
from polyconv.families import make_dn, make_rect, make_spaced_bars, make_square, make_x_pentomino
from polyconv.tiling import parse_placements


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_shorthand_shapes():
    assert parse_shape("bars:n=4,a=2,b=1") == make_spaced_bars(4, 2, 1)
    assert parse_shape("square:3") == make_square(3)
    assert parse_shape("rect:3x4") == make_rect(3, 4)
    assert parse_shape("x") == make_x_pentomino()
    assert parse_shape("d:5") == make_dn(5)


def test_shape_file(tmp_path):
    f = tmp_path / "s.txt"
    f.write_text("##.##\n")
    code, out = call("info", str(f))
    assert code == 0
    assert "norm1: 4" in out and "rookwise_connected: false" in out


def test_check_d4():
    code, out = call("check", "--witness", "square:3", "--mod", "2", "bars:n=4,a=2,b=1")
    assert code == 0
    assert "L1 lhs=6 rhs=8" in out
    assert verify_certificate(Certificate.from_text(out))


def test_witness_d3_inconclusive():
    code, out = call("witness", "bars:n=3,a=2,b=1")
    assert code == 1
    assert out.startswith("inconclusive")


def test_witness_found_and_reverifiable(tmp_path):
    code, out = call("witness", "d:7")
    assert code == 0
    path = tmp_path / "cert.txt"
    path.write_text(out)
    assert call("verify", str(path)) == (0, "certificate verified\n")
    path.write_text(out.replace("lhs: 6", "lhs: 2"))
    assert call("verify", str(path))[0] == 1


def test_witness_budget():
    code, out = call("witness", "domino", "--budget", "2")
    assert code == 1 and "stopped after 2" in out


def test_signed_demo():
    code, out = call("signed-demo")
    assert code == 0
    assert "signed sum ≡ 1 on 288/288 cells" in out


def test_signed_demo_placements():
    code, out = call("signed-demo", "--placements")
    lines = [line for line in out.splitlines() if line and line[0].isdigit() and len(line.split()) == 5]
    assert len(parse_placements("\n".join(lines))) == 180


def test_tile_found_and_unsat():
    code, out = call("tile", "--torus", "12x6", "d:2")
    assert code == 0 and out.startswith("tiling found") and "verified: true" in out
    code, out = call("tile", "--torus", "12x12", "d:4")
    assert code == 0 and out.startswith("unsatisfiable")


def test_tile_budget_inconclusive():
    code, out = call("tile", "--torus", "18x18", "d:3", "--budget", "0")
    assert code == 1 and out.startswith("inconclusive")


def test_conv_mod():
    code, out = call("conv", "square:3", "d:4", "--mod", "2")
    assert code == 0 and "norm1: 6" in out
    code, out = call("conv", "domino", "domino")
    assert out.startswith("#2#\n")


def test_family():
    code, out = call("family", "bars:n=2,a=2,b=1")
    assert code == 0 and out.startswith("##.##\n")


@pytest.mark.parametrize("argv", [
    ["check", "--witness", "domino", "--mod", "2", "d:4"],   # witness not symmetric
    ["check", "--witness", "square:3", "--mod", "1", "d:4"],
    ["info", "nonsense:3"],
    ["info", "bars:n=0"],
    ["tile", "--torus", "12by6", "d:2"],
    ["frobnicate"],
    [],
])
def test_errors_exit_2(argv):
    assert call(*argv)[0] == 2


def test_bad_shape_file(tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("#?#\n")
    assert call("info", str(f))[0] == 2


def test_output_is_byte_identical():
    first = subprocess.run([sys.executable, "-m", "polyconv", "tile", "--torus", "18x18", "d:3"],
                           capture_output=True)
    second = subprocess.run([sys.executable, "-m", "polyconv", "tile", "--torus", "18x18", "d:3"],
                            capture_output=True)
    assert first.returncode == 0
    assert first.stdout == second.stdout
