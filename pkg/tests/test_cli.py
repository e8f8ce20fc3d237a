import json
import subprocess
import sys

import pytest

from snakelab.cli import run


def call(capsys, *argv):
    code = run(["--no-cache", *argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_factorize_golden(capsys):
    code, out, _ = call(capsys, "factorize", "--i", "2", "--n", "3", "0", "6", "4", "2", "10", "16", "10")
    assert code == 0
    assert out.split() == ["(0,2,4,6,10)", "(10)", "(16)"]


def test_factorize_json_either_side(capsys):
    code, out, _ = call(capsys, "--json", "factorize", "--i", "2", "--n", "3", "0", "2")
    assert code == 0 and json.loads(out)["segments"] == [[0, 2]]
    code, out, _ = call(capsys, "factorize", "--i", "2", "--n", "3", "--json", "0", "2")
    assert code == 0 and json.loads(out)["segments"] == [[0, 2]]


def test_position_exit_codes(capsys):
    assert call(capsys, "position", "--i", "2", "--n", "3", "--a", "0,2", "--b", "2")[0] == 0
    code, out, _ = call(capsys, "--json", "position", "--i", "2", "--n", "3", "--a", "0,2", "--b", "4")
    assert code == 1
    assert json.loads(out)["evidence"] == [0, 2, 4]


def test_qchar(capsys):
    code, out, _ = call(capsys, "--json", "qchar", "--n", "1", "--snake", "1:0")
    assert code == 0
    data = json.loads(out)
    assert data["dimension"] == 2 and data["route"] == "prime-snake"


def test_qchar_uncertified_is_usage_error(capsys):
    code, _, err = call(capsys, "qchar", "--n", "3", "--snake", "1:0,1:0,2:3")
    assert code == 2
    assert "certified" in err


def test_paths_plot(capsys, tmp_path):
    svg = tmp_path / "p.svg"
    code, out, _ = call(capsys, "paths", "--i", "1", "--a", "0", "--n", "2", "--monomials", "--plot", str(svg))
    assert code == 0
    assert svg.read_text().startswith("<svg")
    assert "Y[1,0]" in out


def test_tensor_and_tsys(capsys):
    assert call(capsys, "tensor", "--i", "2", "--n", "3", "0,2", "2")[0] == 0
    assert call(capsys, "tensor", "--i", "2", "--n", "3", "0,2", "4")[0] == 1
    code, out, _ = call(capsys, "tsys", "--n", "3", "--omega", "2:0,2:2", "--omega2", "2:2,2:4")
    assert code == 0 and "holds" in out


def test_inflate(capsys):
    code, out, _ = call(capsys, "--json", "inflate", "--ibar", "2", "--i", "2", "--n", "5", "--monomial", "1:-1")
    assert code == 0
    assert "Y[2,-2]" in out


def test_imaginary(capsys):
    code, out, _ = call(capsys, "--json", "imaginary", "--n", "3", "--i", "2", "--b", "4,6", "--certify")
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "imaginary"
    assert data["omega"] == "Y[1,3]·Y[2,0]·Y[2,6]·Y[3,3]"


@pytest.mark.parametrize(
    "argv",
    [
        ["imaginary", "--n", "3", "--i", "2", "--b", "4,6", "--type", "D"],
        ["imaginary", "--n", "3", "--i", "2", "--b", "4,8"],
        ["qchar", "--n", "13", "--snake", "1:0"],
        ["qchar", "--n", "3", "--snake", "1;0"],
        ["factorize", "--i", "5", "--n", "3", "1"],
        ["--max-terms", "0", "qchar", "--n", "1", "--snake", "1:0"],
        ["nonsense"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 2
    assert err.startswith("snakelab: error:")


def test_term_cap(capsys):
    code, _, err = call(capsys, "--max-terms", "3", "qchar", "--n", "3", "--snake", "2:0,2:2")
    assert code == 2
    assert "cap" in err


def test_verify_selection_json(capsys):
    code, out, _ = call(capsys, "--json", "verify", "1,4", "--profile", "smoke")
    assert code == 0
    data = json.loads(out)
    assert [c["criterion"] for c in data["criteria"]] == [1, 4]
    assert all(c["passed"] for c in data["criteria"])


def test_verify_indstep(capsys):
    code, out, _ = call(capsys, "--json", "verify", "indstep", "--ibar", "2", "--i", "2", "--n", "5")
    assert code == 0
    assert json.loads(out)["results"]["i:2"] == "pass"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "snakelab", "--no-cache", "factorize", "--i", "1", "--n", "1", "0", "2"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "(0,2)"
