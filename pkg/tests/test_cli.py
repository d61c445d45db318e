# tests/test_cli.py
from __future__ import annotations

import json

import pytest

from cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_bracket(capsys):
    code, out, _ = run(capsys, "bracket", "L2", "I-2")
    assert code == 0
    assert out.strip() == "2*I0 + 6*CLI"


def test_bracket_of_expressions(capsys):
    code, out, _ = run(capsys, "bracket", "L3", "L-3")
    assert (code, out.strip()) == (0, "6*L0 + 2*CL")


def test_hombracket(capsys):
    code, out, _ = run(capsys, "hombracket", "--k", "2", "L1", "L2")
    assert (code, out.strip()) == (0, "-1/2*L6")


def test_endo_apply_and_calibrate(capsys):
    code, out, _ = run(capsys, "endo", "apply", "--k", "2", "--d=-1/2", "L1")
    assert (code, out.strip()) == (0, "1/2*L2 - 1/2*I2")
    code, out, _ = run(capsys, "endo", "calibrate", "--k", "2", "--window", "4")
    assert code == 0
    assert json.loads(out)["p1"] == "1/16"


def test_act_sign_convention(capsys):
    args = ["act", "--family", "abf", "--alpha", "1/3", "--beta", "1/5", "--F", "2", "L1", "v0"]
    assert run(capsys, *args)[1].strip() == "-8/15*v1"
    assert run(capsys, *args, "--printed-actions")[1].strip() == "8/15*v1"


def test_homact(capsys):
    code, out, _ = run(
        capsys, "homact", "--family", "abf", "--alpha", "1/3", "--F", "1",
        "--k", "4", "--a", "2", "L1", "v0",
    )
    assert (code, out.strip()) == (0, "-2/3*v5")


def test_admissible_prints_shift(capsys):
    code, out, _ = run(
        capsys, "admissible", "--family", "abf", "--alpha", "1/3", "--beta", "0", "--F", "1",
        "--k", "4", "--a", "1", "--b", "1", "--c", "0", "--d", "0",
    )
    assert (code, out.strip()) == (0, "q = 1")


def test_admissible_constraint_violation(capsys):
    code, out, err = run(capsys, "admissible", "--family", "abf", "--alpha", "1/3", "--F", "1",
                         "--k", "4", "--b", "2")
    assert code == 2
    assert out == ""
    assert "b=1" in err


def test_check_jacobi_passes(capsys):
    code, out, _ = run(capsys, "check", "jacobi", "--window", "4")
    assert code == 0
    report = json.loads(out)
    assert report["status"] == "pass"
    assert report["checked"] == 18 ** 3


def test_check_failure_exit_code(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, out, _ = run(capsys, "check", "endo-hom", "--k", "2", "--corrections", "printed",
                       "--window", "3", "--out", str(path))
    assert code == 1
    assert out == ""
    report = json.loads(path.read_text())
    assert report["counterexamples"][0]["point"] == {"x": "L1", "y": "L-1"}


def test_check_unknown_suite(capsys):
    code, _, err = run(capsys, "check", "nope")
    assert code == 2
    assert "unknown suite" in err


def test_audit_thm22(capsys):
    code, out, _ = run(capsys, "audit", "thm22", "--k", "2", "--window", "4")
    assert code == 0
    report = json.loads(out)
    assert report["verdict"] == "mismatch"
    assert [e["component"] for e in report["entries"] if e["verdict"] == "mismatch"] == ["p1"]


def test_solve_twist(capsys):
    code, out, _ = run(capsys, "solve-twist", "--family", "abf", "--alpha", "1", "--F", "1",
                       "--k", "2", "--window", "6")
    assert code == 0
    assert json.loads(out)["dimension"] == 1


def test_weight_and_orbit(capsys):
    assert run(capsys, "weight", "--family", "u", "--F", "2")[1].strip() == "weight module"
    code, out, _ = run(capsys, "orbit", "--family", "abf", "--window", "3", "0")
    assert (code, out.strip()) == (0, "0")


@pytest.mark.parametrize(
    "argv",
    [
        ["bracket", "L1 +", "L2"],
        ["bracket", "L1", "v0"],
        ["endo", "calibrate", "--k", "0"],
        ["frobnicate"],
        ["audit", "section3", "--family", "abf", "--alpha", "1/3", "--F", "1", "--k", "4", "--window=-2"],
        ["audit", "thm22", "--k", "2", "--window=-1"],
        ["check", "jacobi", "--window=-1"],
        ["solve-twist", "--window=-1"],
        ["orbit", "--window=-1", "0"],
        [],
    ],
)
def test_usage_and_domain_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_negative_window_is_reported(capsys):
    code, out, err = run(capsys, "audit", "section3", "--family", "abf", "--alpha", "1/3",
                         "--F", "1", "--k", "4", "--window=-2")
    assert code == 2
    assert out == ""
    assert "window must be >= 0" in err
