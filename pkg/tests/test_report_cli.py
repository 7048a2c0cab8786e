import dataclasses
import json
import subprocess
import sys

import pytest
from hypothesis import given, settings

from rectifiable import cli, corpus
from rectifiable.corpus import FIXTURES, Expectation, run_corpus
from rectifiable.report import AnalysisError, AnalysisReport, analyze, ratfunc_from_json, ratfunc_json
from rectifiable.specfile import CurveSpec
from strategies import ratfuncs


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_report_round_trip(name):
    report = analyze(FIXTURES[name].spec)
    again = AnalysisReport.from_json(report.to_json())
    assert again == report
    assert again.to_text() == report.to_text()
    assert ratfunc_from_json(report.q) == FIXTURES[name].spec.to_curve().x.derivative() ** 2 + \
        FIXTURES[name].spec.to_curve().y.derivative() ** 2


@settings(max_examples=100)
@given(ratfuncs(4))
def test_ratfunc_json_lossless(f):
    assert ratfunc_from_json(json.loads(json.dumps(ratfunc_json(f)))) == f


def test_report_is_bit_exact_across_runs():
    spec = FIXTURES["semicubic"].spec
    assert analyze(spec).to_json() == analyze(spec).to_json()


def test_analyze_examples():
    semi = analyze(FIXTURES["semicubic"].spec)
    assert semi.euclidean_stratum == [2, 1, 1, -8]
    assert semi.rectification["verdict"] == "exact"
    assert semi.rectification["f"]["text"] == "1/4*t^6 + 1/3*t^4 + 4/27*t^2 + 16/729"
    circle = analyze(FIXTURES["circle"].spec)
    assert circle.euclidean_stratum == [-2, -2]
    assert circle.rectification["witness"]["kind"] == "residue_obstruction"
    assert circle.classification == {"kind": "circle", "center": ["0/1", "0/1"], "radius2": "1/1"}
    cubic = analyze(FIXTURES["nodal_cubic"].spec)
    assert cubic.euclidean_stratum == [1, 1, 1, 1, -8]
    assert cubic.affine["stratum"] == [1, 1, -8]


def test_analyze_sections_and_errors():
    report = analyze(FIXTURES["parabola"].spec, ["stratum"])
    assert report.rectification is None and report.euclidean_stratum == [1, 1, -6]
    with pytest.raises(ValueError):
        analyze(FIXTURES["parabola"].spec, ["plots"])
    with pytest.raises(AnalysisError) as info:
        analyze(CurveSpec("dot", "1", "2"))
    assert info.value.operation == "PlaneCurve"
    line = analyze(FIXTURES["line"].spec)
    assert line.affine["error"].startswith("affine_cubic_diff:")


def test_report_rejects_unknown_fields():
    d = analyze(FIXTURES["line"].spec).to_dict()
    d["extra"] = 1
    with pytest.raises(ValueError):
        AnalysisReport.from_dict(d)


def test_corpus_all_pass_and_sorted():
    summary = run_corpus(workers=4)
    assert summary.ok, [str(m) for m in summary.mismatches]
    assert [r.name for r in summary.results] == sorted(FIXTURES)
    notes = [n for r in summary.results for n in r.notes]
    assert any("6*t^2 + 1" in n and "6*t^2 + 2" in n for n in notes)


def test_corpus_mismatch_is_reported(monkeypatch):
    fx = FIXTURES["circle"]
    broken = dataclasses.replace(fx, expect=dataclasses.replace(fx.expect, euclidean_stratum=(-2,)))
    monkeypatch.setitem(corpus.FIXTURES, "circle", broken)
    summary = run_corpus(["circle"])
    assert not summary.ok
    m = summary.mismatches[0]
    assert (m.name, m.field) == ("circle", "euclidean_stratum")
    assert cli.main(["corpus"]) == cli.EXIT_MISMATCH


def test_cli_exit_codes(capsys, tmp_path):
    assert cli.main(["analyze", "--fixture", "semicubic"]) == 0
    assert "euclidean_stratum: [2, 1, 1, -8]" in capsys.readouterr().out
    assert cli.main(["evolute", "--fixture", "line"]) == cli.EXIT_ANALYSIS
    assert cli.main(["analyze", "--x", "t^(1/2)", "--y", "t"]) == cli.EXIT_PARSE
    assert cli.main(["analyze", str(tmp_path / "missing.curve")]) == cli.EXIT_PARSE
    assert cli.main(["corpus"]) == 0
    capsys.readouterr()


def test_cli_global_flags_either_side(capsys):
    assert cli.main(["--json", "--param", "a=3", "analyze", "--fixture", "semicubic"]) == 0
    before = json.loads(capsys.readouterr().out)
    assert cli.main(["analyze", "--fixture", "semicubic", "--json", "--param", "a=3"]) == 0
    after = json.loads(capsys.readouterr().out)
    assert before == after
    assert before["curve"]["params"] == {"a": "3/1"}
    assert before["q"]["text"] == "81*t^4 + 36*t^2"


def test_cli_commands(capsys, tmp_path):
    assert cli.main(["--json", "rectify", "--coeff", "(t^2 + 1)^4"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["rectification"]["primitive"]["p"]["text"] == "1/5*t^5 + 2/3*t^3 + t"
    assert cli.main(["--json", "affine", "--x", "t", "--y", "t^3"]) == 0
    assert json.loads(capsys.readouterr().out)["stratum"] == [1, -7]
    assert cli.main(["--json", "pluecker", "3", "--variant", "rational"]) == 0
    assert json.loads(capsys.readouterr().out)["evolute"]["nodes"] == 40
    assert cli.main(["--json", "realize", "--bound", "2", "2/(t^4 + 1)"]) == 0
    assert len(json.loads(capsys.readouterr().out)["realizations"]) >= 1
    assert cli.main(["--json", "evolute", "--fixture", "circle"]) == 0
    assert json.loads(capsys.readouterr().out)["evolute"]["kind"] == "point"
    spec = tmp_path / "p.curve"
    spec.write_text("name = p\nparam k = 2\nx = t\ny = k*t^2\n")
    assert cli.main(["--json", "rectify", str(spec)]) == 0
    assert json.loads(capsys.readouterr().out)["stratum"] == [1, 1, -6]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "rectifiable", "pluecker", "4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "klass: 6" in proc.stdout
