from __future__ import annotations

import io
import json
import subprocess
import sys


from ecix.cli import main
from ecix.enumeration import ClassFilter
from ecix.extremal import Cell, Counterexample, Verdict, VerificationOutcome, search_extremal
from ecix.families import FamilySpec, construct
from ecix.graph import eci_report
from ecix.report import emit_report


def run(*argv, stdin=None, monkeypatch=None):
    out = io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_eci_report_csv():
    text = emit_report(eci_report(construct(FamilySpec("complete-split", 4, x=1))), "csv")
    lines = text.split("\n")
    assert lines[0] == "vertex,degree,eccentricity,product"
    assert lines[1:5] == ["0,3,1,3", "1,1,2,2", "2,1,2,2", "3,1,2,2"]
    assert lines[5] == "total,,,9"
    assert "\r" not in text


def test_eci_report_other_formats():
    rep = eci_report(construct(FamilySpec("complete", 4)))
    assert emit_report(rep, "table").rstrip().endswith("total 12")
    rows = [json.loads(x) for x in emit_report(rep, "json-lines").splitlines()]
    assert rows[-1] == {"total": 12} and rows[0]["product"] == 3


def test_outcome_exit_codes_and_counterexamples():
    ok = VerificationOutcome("min-order", 4, 4, Verdict.PASS)
    assert ok.exit_code == 0
    assert VerificationOutcome("conjecture-max", 5, 5, Verdict.HOLDS).exit_code == 0
    bad = VerificationOutcome(
        "min-order", 4, 4, Verdict.FAIL,
        [Counterexample("n=4", "Ch", "9", "14"), Counterexample("n=4", "C~", "9", "12")],
        [Cell("n=4", 6, 9, ("CF",), False)],
    )
    assert bad.exit_code == 2
    assert VerificationOutcome("conjecture-max", 5, 5, Verdict.REFUTED).exit_code == 2
    csv_lines = emit_report(bad, "csv").splitlines()
    ce = [line for line in csv_lines if line.startswith("counterexample")]
    assert ce == ["counterexample,min-order,n=4,,,Ch,9,14,", "counterexample,min-order,n=4,,,C~,9,12,"]
    assert csv_lines[-1].startswith("summary,min-order,4..4")
    table = emit_report(bad, "table")
    assert "2 counterexample(s)" in table and "Ch" in table and "C~" in table


def test_extremal_report_lists_graph6():
    res = search_extremal(ClassFilter(5, pending=0), "min")
    text = emit_report(res, "csv")
    lines = text.splitlines()
    assert lines[0] == "class,direction,value,class_size,graph6"
    assert len(lines) == 5 and all(",min,20," in line for line in lines[1:])
    obj = json.loads(emit_report(res, "json-lines"))
    assert obj["value"] == 20 and len(obj["optima"]) == 4


def test_compute_from_flag_and_stdin(monkeypatch):
    code, out = run("compute", "--g6", "C~", "--format", "csv")
    assert code == 0 and out.splitlines()[-1] == "total,,,12"
    code, out = run("compute", stdin="Dhc\nC~\n", monkeypatch=monkeypatch)
    assert code == 0 and "total 20" in out and "total 12" in out


def test_compute_bad_input(capsys):
    code, _ = run("compute", "--g6", "C}x")
    assert code == 1
    assert "error" in capsys.readouterr().err
    code, _ = run("compute", "--g6", "C?")  # edgeless, hence disconnected
    assert code == 1


def test_family():
    code, out = run("family", "--name", "H", "--n", "8", "--p", "3")
    assert code == 0
    assert "eci 29" in out and "closed_form 29" in out and "pendant-star(8,3)" in out
    code, out = run("family", "--name", "wheel", "--n", "6")
    assert "closed_form none" in out and "eci 35" in out
    code, _ = run("family", "--name", "H", "--n", "8", "--p", "7")
    assert code == 1


def test_enumerate():
    code, out = run("enumerate", "--n", "4")
    assert code == 0 and len(out.split()) == 6
    code, out = run("enumerate", "--n", "8", "--count-only")
    assert out.strip() == "11117"
    code, out = run("enumerate", "--n", "5", "--pending", "4")
    assert len(out.split()) == 1
    code, out = run("enumerate", "--n", "6", "--edges", "5", "--count-only")
    assert out.strip() == "6"  # trees on 6 vertices


def test_extremal_and_verify():
    code, out = run("extremal", "--n", "6", "--pending", "0", "--direction", "min")
    assert code == 0 and "min index 26" in out
    code, out = run("verify", "--statement", "min-order", "--n-min", "4", "--n-max", "6")
    assert code == 0 and "pass" in out
    code, out = run("verify", "--statement", "conjecture-max", "--n-min", "5", "--n-max", "6", "--format", "json-lines")
    assert code == 0
    assert json.loads(out.splitlines()[-1])["verdict"] == "conjecture-holds"


def test_usage_errors():
    assert run("verify", "--statement", "nope", "--n-min", "4", "--n-max", "5")[0] == 1
    assert run("extremal", "--n", "4", "--pending", "3", "--edges", "4")[0] == 1
    assert run()[0] == 1


def test_budget_env_and_config(tmp_path, monkeypatch):
    monkeypatch.setenv("ECIX_BUDGET", "5")
    assert run("enumerate", "--n", "6", "--count-only")[0] == 1
    monkeypatch.delenv("ECIX_BUDGET")
    cfg = tmp_path / "ecix.conf"
    cfg.write_text("budget = 5\noutput-format = csv\n")
    assert run("enumerate", "--n", "6", "--count-only", "--config", str(cfg))[0] == 1
    code, out = run("compute", "--g6", "C~", "--config", str(cfg))
    assert code == 0 and out.startswith("vertex,degree")
    cfg.write_text("colour = red\n")
    assert run("compute", "--g6", "C~", "--config", str(cfg))[0] == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ecix.cli", "family", "--name", "C", "--n", "5"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and "eci 20" in proc.stdout
