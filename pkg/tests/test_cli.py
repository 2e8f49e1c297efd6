"""Command-line behaviour: formats, exit codes, determinism, file output."""

import json

import pytest

from umbralcalc import cli
from umbralcalc.registry import CheckResult


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_bell_text(capsys):
    code, out, _ = run(capsys, "bell", "--order", "7")
    assert code == 0
    assert out == "1 1 2 5 15 52 203 877\n"


def test_bell_json(capsys):
    code, out, _ = run(capsys, "bell", "--order", "5", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"bell": ["1", "1", "2", "5", "15", "52"]}


def test_bell_csv(capsys):
    code, out, _ = run(capsys, "bell", "--order", "2", "--format", "csv")
    assert code == 0
    assert out == "n,bell\n0,1\n1,1\n2,2\n"


def test_umbral_seq(capsys):
    code, out, _ = run(capsys, "umbral-seq", "--B", "exp(t)-1", "--n", "2")
    assert code == 0
    assert out == "0 1 1\n"


def test_theta(capsys):
    code, out, _ = run(capsys, "theta", "--B", "exp(t)-1", "--p", "0,0,1")
    assert code == 0
    assert out == "0 1 1\n"


def test_shift_classical(capsys):
    code, out, _ = run(capsys, "shift", "--B", "t", "--p", "0,1")
    assert code == 0
    assert out == "0 0 1\n"  # multiplication by x


def test_shift_level_one(capsys):
    code, out, _ = run(capsys, "shift", "--B", "exp(t)-1", "--m", "1", "--p", "0,1,1")
    assert code == 0
    assert out == "0 4\n"  # f_1(2) B_1 = 4x


def test_fmn_table_csv(capsys):
    code, out, _ = run(
        capsys, "fmn-table", "--max-m", "3", "--max-n", "5", "--format", "csv"
    )
    assert code == 0
    assert "1,0,1,4,9,16,25" in out.splitlines()


def test_fmn_table_json(capsys):
    code, out, _ = run(
        capsys, "fmn-table", "--max-m", "1", "--max-n", "3", "--format", "json"
    )
    assert code == 0
    assert json.loads(out)["rows"]["0"] == ["1/2", "3/2", "5/2", "7/2"]


def test_pair(capsys):
    code, out, _ = run(capsys, "pair", "--A", "exp(t)", "--p", "1,1,1")
    assert code == 0
    assert out == "3\n"


def test_verify_single_pass(capsys):
    code, out, _ = run(capsys, "verify", "--id", "F-CLOSED", "--order", "8")
    assert code == 0
    assert out.startswith("PASS F-CLOSED")


def test_verify_unknown_tag(capsys):
    code, _, err = run(capsys, "verify", "--id", "NOPE")
    assert code == 2
    assert "unknown identity" in err


def test_verify_reports_failure(capsys, monkeypatch):
    fake = CheckResult("F-CLOSED", False, "t^3: 1 != 2")
    monkeypatch.setattr(cli.registry, "run_check", lambda *a, **k: fake)
    code, out, _ = run(capsys, "verify", "--id", "F-CLOSED")
    assert code == 1
    assert "FAIL F-CLOSED: t^3: 1 != 2" in out


def test_verify_json_shape(capsys):
    code, out, _ = run(
        capsys, "verify", "--id", "LADDER", "--format", "json", "--seed", "3"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    assert payload["seed"] == 3
    assert payload["results"][0]["tag"] == "LADDER"


def test_verify_deterministic_per_tag(capsys):
    _, first, _ = run(capsys, "verify", "--id", "ADJ-SUBST", "--seed", "7")
    _, second, _ = run(capsys, "verify", "--id", "ADJ-SUBST", "--seed", "7")
    assert first == second


def test_bad_series_expression_is_usage_error(capsys):
    code, _, err = run(capsys, "umbral-seq", "--B", "t/(1-t", "--n", "2")
    assert code == 2
    assert "offset 6" in err
    assert "series expression grammar" in err


def test_non_delta_series_is_usage_error(capsys):
    code, _, err = run(capsys, "umbral-seq", "--B", "1+t", "--n", "2")
    assert code == 2
    assert "delta" in err


def test_bad_polynomial_is_usage_error(capsys):
    code, _, err = run(capsys, "theta", "--B", "t", "--p", "1,zebra")
    assert code == 2
    assert "bad polynomial" in err


def test_negative_order_is_usage_error(capsys):
    code, _, err = run(capsys, "bell", "--order", "-2")
    assert code == 2
    assert "nonnegative" in err


def test_usage_error_prints_grammar(capsys):
    with pytest.raises(SystemExit) as exit_info:
        cli.main(["bell", "--format", "xml"])
    assert exit_info.value.code == 2
    err = capsys.readouterr().err
    assert "series expression grammar" in err


def test_output_file(tmp_path, capsys):
    target = tmp_path / "bell.txt"
    code, out, _ = run(capsys, "bell", "--order", "3", "--output", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text() == "1 1 2 5\n"
