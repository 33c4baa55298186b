"""Command-line surface: output contracts, determinism, exit codes."""

import json

import pytest

from ybhecke.cli import main
from ybhecke.permutations import Permutation
from ybhecke.serialize import parse_scalar, poly_from_json, rf_from_json


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_schubert_table_text(capsys):
    code, out = run(capsys, "schubert", "-n", "1")
    assert code == 0
    assert out.strip() == "1: 1"


def test_schubert_table_latex(capsys):
    code, out = run(capsys, "schubert", "-n", "4", "--format", "latex")
    assert code == 0
    lines = [l for l in out.splitlines() if l]
    assert len(lines) == 24
    assert "X_{2134} = x_1-y_1" in lines


def test_grothendieck_json_roundtrip(capsys):
    code, out = run(capsys, "grothendieck", "-n", "3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["n"] == 3 and len(payload["entries"]) == 6
    g132 = poly_from_json(payload["entries"]["132"])
    assert parse_scalar("1 - y1*y2/(x1*x2)") == g132


def test_yb_rothe_factor_sequence(capsys):
    code, out = run(capsys, "yb", "-n", "5", "--family", "T", "35142", "--basis", "rothe")
    assert code == 0
    assert "factors: (54)T4 (32)T2 (52)T3 (42)T4 (31)T1 (51)T2" in out


def test_yb_identity_partial(capsys):
    code, out = run(capsys, "yb", "-n", "3", "--family", "partial", "123")
    assert code == 0
    assert "123: 1" in out.splitlines()


def test_yb_sigma_321_identity_coefficient(capsys):
    code, out = run(capsys, "yb", "-n", "3", "--family", "sigma", "321", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    c = rf_from_json(payload["terms"]["123"])
    assert c == parse_scalar("1 + (u1-u2)*(u2-u3)")


def test_yb_with_specialized_parameters(capsys):
    code, out = run(
        capsys,
        "yb", "-n", "2", "--family", "T", "21",
        "--q1", "-1", "--q2", "0", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert rf_from_json(payload["terms"]["21"]) == parse_scalar("1 - u2/u1")


def test_yb_bad_permutation_exits_2(capsys):
    code, _ = run(capsys, "yb", "-n", "3", "--family", "T", "1123")
    assert code == 2
    code, _ = run(capsys, "yb", "-n", "4", "--family", "T", "321")
    assert code == 2


def test_gram_n1_and_n2(capsys):
    code, out = run(capsys, "gram", "-n", "1", "--family", "T")
    assert code == 0
    assert "1,1: 1" in out
    code, out = run(capsys, "gram", "-n", "2", "--family", "T", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["orthogonal"] is True
    # antidiagonal support only
    assert set(payload["entries"]) == {"12,21", "21,12"}


def test_gram_partial_n3_antidiagonal(capsys):
    code, out = run(capsys, "gram", "-n", "3", "--family", "partial")
    assert code == 0
    assert "orthogonality: ok" in out
    omega = Permutation.longest(3)
    for line in out.splitlines():
        if ":" in line and "," in line and not line.startswith("#"):
            key = line.split(":")[0]
            mu, nu = key.split(",")
            got = Permutation.from_string(nu)
            assert got == omega * Permutation.from_string(mu)


def test_gram_rank_guard(capsys):
    code, _ = run(capsys, "gram", "-n", "4", "--family", "T")
    assert code == 2


def test_verify_exit_codes(capsys):
    code, out = run(capsys, "verify", "newton", "-n", "3", "--seed", "7")
    assert code == 0
    assert "verify newton: PASS" in out
    code, _ = run(capsys, "verify", "nosuch", "-n", "3")
    assert code == 2


def test_verify_orthogonality_partial_n4(capsys):
    code, out = run(capsys, "verify", "orthogonality", "-n", "4", "--family", "partial")
    assert code == 0
    assert "576 checks" in out


def test_output_determinism(capsys, tmp_path):
    args = ("yb", "-n", "4", "--family", "T", "4231", "--format", "json")
    _, first = run(capsys, *args)
    _, second = run(capsys, *args)
    assert first == second


def test_out_file(capsys, tmp_path):
    target = tmp_path / "table.txt"
    code, out = run(capsys, "schubert", "-n", "2", "--out", str(target))
    assert code == 0
    assert target.read_text() == out
