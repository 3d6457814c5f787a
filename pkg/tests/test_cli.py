from __future__ import annotations

import json
import subprocess
import sys

import pytest

from pstriple import verify
from pstriple.cli import UsageError, build_report, emit_report, main, parse_args
from pstriple.exact import GaussianRational


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_args_examples():
    spec = parse_args(["dirac", "--case", "reduced", "--grading", "gamma-star", "--beta", "final"])
    assert (spec.command, spec.case_tag, spec.grading, spec.beta) == ("dirac", "reduced", "gamma-star", "final")
    spec = parse_args(["beta", "--case", "sm", "--format", "json"])
    assert (spec.command, spec.case_tag, spec.fmt) == ("beta", "standard-model", "json")
    with pytest.raises(UsageError, match="--beta"):
        parse_args(["dirac", "--case", "unreduced", "--beta", "b7"])


def test_usage_errors_exit_2(capsys):
    code, _, err = run(["dirac", "--case", "unreduced", "--beta", "b7"], capsys)
    assert code == 2 and "--beta" in err
    code, _, err = run(["dirac", "--frobnicate"], capsys)
    assert code == 2 and "--frobnicate" in err
    code, _, err = run(["verify", "no-such-check"], capsys)
    assert code == 2 and "no-such-check" in err


def test_dirac_report(capsys):
    code, out, _ = run(["dirac", "--case", "unreduced", "--grading", "gamma"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["dimensions"] == {"real_dim": 512}
    assert set(data) == {"meta", "inputs", "dimensions", "checks", "verdicts"}
    assert data["checks"][0] == {"name": "constraints-recheck", "paper_anchor": data["checks"][0]["paper_anchor"], "pass": True}


def test_beta_signs_and_self_adjoint(capsys):
    code, out, _ = run(["dirac", "--case", "reduced", "--grading", "gamma-star", "--beta", "1,1,1,-1", "--self-adjoint"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["verdicts"][0]["physical"] is True
    assert data["dimensions"]["real_dim"] < 320


def test_commutant_basis_strings(capsys):
    code, out, _ = run(["commutant", "--case", "unreduced", "--basis"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["dimensions"] == {"complex_dim": 48, "real_dim": 96}
    assert len(data["basis"]) == 96
    for row, col, value in data["basis"][0]:
        assert 1 <= row <= 32 and 1 <= col <= 32
        GaussianRational.parse(value)
    assert data["checks"][0]["pass"]


def test_reports_are_byte_identical():
    spec = parse_args(["beta", "--case", "reduced"])
    assert emit_report(build_report(spec)) == emit_report(build_report(spec))


def test_json_roundtrip_preserves_dimensions_and_checks():
    spec = parse_args(["verify", "commutant"])
    rep = build_report(spec)
    data = json.loads(emit_report(rep))
    assert data["checks"] == rep.checks
    assert data["dimensions"]["commutant-unreduced"]["complex_dim"] == 48


def test_text_format(capsys):
    code, out, _ = run(["beta", "--case", "unreduced", "--format", "text"], capsys)
    assert code == 0
    assert "candidates: 2" in out and "name: nontrivial" in out


def test_failed_check_exits_1(monkeypatch, capsys):
    monkeypatch.setitem(verify.REGISTRY, "commutant-unreduced", verify.Check("commutant-unreduced", "forced failure", lambda: (False, {})))
    code, out, err = run(["verify", "commutant-unreduced"], capsys)
    assert code == 1
    assert "commutant-unreduced" in err
    assert json.loads(out)["checks"][0]["pass"] is False


def test_out_file(tmp_path, capsys):
    target = tmp_path / "r.json"
    code, out, _ = run(["commutant", "--case", "reduced", "--out", str(target)], capsys)
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["dimensions"]["complex_dim"] == 64
    code, _, err = run(["commutant", "--out", str(tmp_path / "missing" / "r.json")], capsys)
    assert code == 1 and "missing" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pstriple", "beta", "--case", "unreduced"], capture_output=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["dimensions"]["candidates"] == 2
