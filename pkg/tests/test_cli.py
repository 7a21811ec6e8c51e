import json

import pytest

from multisym.cli import main
from multisym.expressions import ParseError, parse_expression, recognize
from multisym.invariants import elementary, power_sum
from multisym.operators import frobenius_split
from multisym.poly import Poly


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- expression grammar ------------------------------------------------------

def test_parse_basic_elements():
    p, w = 3, 2
    assert parse_expression("M(1,1)", p, w) == power_sum((1, 1), p, w)
    assert parse_expression("E(1,1)", p, w) == elementary((1, 1), p, w)
    assert parse_expression("Ep(2)", p, w) == elementary((0, 3), p, w)
    assert parse_expression("x[1,2]", p, w) == Poly.variable(p, p, 1, 2)
    assert parse_expression("2", p, w) == Poly.const(p, p, 2)


def test_parse_arithmetic():
    p, w = 3, 2
    f = parse_expression("M(1)*M(1) - 2*M(2)", p, w)
    assert f == power_sum((1,), p, w) ** 2 - power_sum((2,), p, w).scale(2)
    g = parse_expression("M(1)^3", p, w)
    assert g == power_sum((1,), p, w) ** 3
    h = parse_expression("-M(1) + (M(1) + M(1))", p, w)
    assert h == power_sum((1,), p, w)


def test_parse_operators():
    p, w = 3, 2
    assert parse_expression("frobenius(M(1))", p, w) == power_sum((3,), p, w)
    assert parse_expression("psi(M(3,3))", p, w) == power_sum((1, 1), p, w)
    assert parse_expression("polarize(M(5),1,2,2)", p, w) == \
        power_sum((3, 2), p, w)


def test_parse_errors_have_positions():
    with pytest.raises(ParseError) as err:
        parse_expression("M(1,", 2, 2)
    assert "position" in str(err.value)
    with pytest.raises(ParseError):
        parse_expression("Q(1)", 2, 2)
    with pytest.raises(ParseError):
        parse_expression("M(1) M(1)", 2, 2)
    with pytest.raises(ParseError):
        parse_expression("x[1,7]", 2, 2)  # column beyond the width


def test_recognize():
    assert recognize(power_sum((3, 2), 3, 2), 2) == "M(3,2)"
    assert recognize(elementary((1, 1), 3, 2), 2) == "E(1,1)"
    assert recognize(Poly.zero(3, 3), 2) == "0"
    assert recognize(power_sum((1,), 3, 2) + Poly.one(3, 3), 2) is None


# -- commands ----------------------------------------------------------------

def test_eval_expansion(capsys):
    code, out, _ = run_cli(capsys, "eval", "M(1,1)", "--p", "3", "--width", "2")
    assert code == 0
    assert out.splitlines()[0].count("+") == 2
    assert "recognized: M(1,1)" in out


def test_eval_splitting_of_square(capsys):
    code, out, _ = run_cli(capsys, "eval", "psi(M(2,2))", "--p", "2")
    assert code == 0
    assert "recognized: M(1,1)" in out


def test_eval_polarize_json(capsys):
    code, out, _ = run_cli(
        capsys, "eval", "polarize(M(5),1,2,2)", "--p", "3", "--format", "json"
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["recognized"] == "M(3,2)"
    assert len(obj["terms"]) == 3


def test_eval_parse_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "eval", "M(1,", "--p", "2")
    assert code == 2
    assert "position" in err


def test_member_reports(capsys):
    code, out, _ = run_cli(capsys, "member", "M(1,1)", "--p", "3")
    assert code == 0
    assert "in invariant ring: true" in out
    assert "in polarization algebra: true" in out
    code, out, _ = run_cli(capsys, "member", "x[1,1]", "--p", "3")
    assert code == 0
    assert "in invariant ring: false" in out
    code, out, _ = run_cli(
        capsys, "member", "M(1,2)", "--p", "3", "--format", "json"
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["in_invariant_ring"] is True
    assert isinstance(obj["in_polarization_algebra"], bool)


def test_member_requires_homogeneous(capsys):
    code, _, err = run_cli(capsys, "member", "M(1) + M(2)", "--p", "3")
    assert code == 2
    assert "homogeneous" in err


def test_certify_writes_verified_file(capsys, tmp_path):
    out_path = tmp_path / "cert.json"
    code, out, _ = run_cli(
        capsys, "certify", "(1,1)", "--pth-power", "--p", "3",
        "--out", str(out_path),
    )
    assert code == 0
    assert "verified: true" in out
    obj = json.loads(out_path.read_text())
    assert obj["target"] == [3, 3]


def test_certify_base_case_stdout(capsys):
    code, out, _ = run_cli(
        capsys, "certify", "(2)", "--p", "2", "--format", "json"
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["verified"] is True
    assert obj["certificate"]["terms"] == [{"coeff": 1, "factors": [[1], [1]]}]


def test_mingens_csv(capsys):
    code, out, _ = run_cli(
        capsys, "mingens", "--p", "2", "--width", "2", "--max-degree", "4",
        "--format", "csv",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "p,n,degree,dim_gamma,dim_P,dim_square,dim_quotient,predicted_count,match"
    assert lines[2] == "2,2,2,6,6,3,3,3,true"
    assert all(line.endswith("true") for line in lines[1:])


def test_mingens_text_and_json(capsys):
    code, out, _ = run_cli(capsys, "mingens", "--p", "3", "--width", "2",
                           "--max-degree", "3")
    assert code == 0
    assert "minimal generators p=3" in out
    code, out, _ = run_cli(capsys, "mingens", "--p", "3", "--width", "2",
                           "--max-degree", "2", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert rows[1]["dim_quotient"] == rows[1]["predicted_count"] == 3


def test_witness_pass(capsys):
    code, out, _ = run_cli(capsys, "witness", "--d", "1", "--N", "2",
                           "--p", "2", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["passed"] is True
    assert obj["checks"]["splitting_replay_ok"] is True


def test_witness_rejects_small_N(capsys):
    code, _, err = run_cli(capsys, "witness", "--d", "1", "--N", "1", "--p", "2")
    assert code == 2
    assert "N > d" in err


def test_selftest_deterministic_bytes(capsys, tmp_path):
    a, b = tmp_path / "a.log", tmp_path / "b.log"
    for target in (a, b):
        code, _, _ = run_cli(
            capsys, "selftest", "--seed", "5", "--samples", "3",
            "--out", str(target),
        )
        assert code == 0
    assert a.read_bytes() == b.read_bytes()


def test_selftest_mutation_mode_goes_red(capsys):
    code, out, _ = run_cli(capsys, "selftest", "--seed", "5", "--samples", "2",
                           "--inject-mutation")
    assert code == 3
    assert "FAIL mutation_control" in out


def test_env_var_defaults(capsys, monkeypatch):
    monkeypatch.setenv("MULTISYM_P", "3")
    monkeypatch.setenv("MULTISYM_WIDTH", "2")
    code, out, _ = run_cli(capsys, "eval", "M(1,1)")
    assert code == 0
    assert out.splitlines()[0].count("+") == 2  # three rows at p=3


def test_config_validation(capsys):
    code, _, err = run_cli(capsys, "eval", "M(1)", "--p", "4")
    assert code == 2
    assert "prime" in err


def test_cap_exceeded_exit_code(capsys):
    code, _, err = run_cli(capsys, "mingens", "--p", "3", "--width", "3",
                           "--max-degree", "6", "--cap", "50")
    assert code == 4
    assert "cap" in err.lower()
