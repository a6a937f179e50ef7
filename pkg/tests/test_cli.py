import json

import pytest
from conftest import same

from selfdual.cli import build_parser, run
from selfdual.cli.suite import linear_time, run_suite
from selfdual.config import settings
from selfdual.constructions import construct_S
from selfdual.errors import ExitCode
from selfdual.planar_map.io import from_graph6


def test_parser_knows_every_subcommand():
    parser = build_parser()
    for command in ("construct", "verify", "enumerate", "fingerprint", "suite"):
        assert command in parser.format_help()


def test_construct_graph6(capsys):
    assert run(["construct", "s", "--x", "7", "--y", "5", "--format", "graph6"]) == ExitCode.OK
    line = capsys.readouterr().out.strip().splitlines()[0]
    assert same(from_graph6(line), construct_S(7, 5).underlying())


def test_construct_then_verify_from_file(tmp_path):
    path = tmp_path / "p66.json"
    assert run(["construct", "p-of-t", "--tuple", "6,6", "--output", str(path)]) == ExitCode.OK
    assert json.loads(path.read_text(encoding="utf-8"))["vertices"]
    assert run(["verify", "--self-dual", "--file", str(path)]) == ExitCode.OK


def test_verify_lemma_leaf_and_phi(tmp_path):
    report = tmp_path / "report.json"
    assert run(["--report", str(report), "verify", "--lemma-leaf", "--phi", "--tuple", "6,5,6"]) == ExitCode.OK
    details = json.loads(report.read_text(encoding="utf-8"))["details"]
    assert details["lemma_leaf"] is True and details["phi"] is True


def test_verify_reports_a_failed_check():
    assert run(["verify", "q", "--x", "5", "--y", "4"]) == ExitCode.VERIFICATION_FAILED


def test_verify_prints_the_bijection(capsys):
    assert run(["verify", "s", "--x", "4", "--y", "4"]) == ExitCode.OK
    assert "bijection:" in capsys.readouterr().out


def test_enumerate_writes_a_report(tmp_path, capsys):
    report = tmp_path / "enum.json"
    code = run(["--report", str(report), "enumerate", "--sequence", "4,4,3,3,3,3", "--self-dual"])
    assert code == ExitCode.OK
    data = json.loads(report.read_text(encoding="utf-8"))
    assert data["details"]["count"] == 1
    line = capsys.readouterr().out.strip().splitlines()[0]
    assert same(from_graph6(line), construct_S(4, 4).underlying())


def test_fingerprint_of_gp(tmp_path):
    report = tmp_path / "fp.json"
    assert run(["--report", str(report), "fingerprint", "gp", "--p", "9", "--h3"]) == ExitCode.OK
    assert json.loads(report.read_text(encoding="utf-8"))["details"]["fingerprint"] == "P3 ∪ K1"


def test_bad_arguments():
    assert run([]) == ExitCode.BAD_ARGUMENTS
    assert run(["construct", "s", "--x", "4"]) == ExitCode.BAD_ARGUMENTS
    assert run(["construct", "s", "--x", "4", "--y", "5"]) == ExitCode.BAD_ARGUMENTS
    assert run(["construct", "p-of-t", "--tuple", "6,2"]) == ExitCode.BAD_ARGUMENTS
    assert run(["enumerate", "--sequence", "3,3,3"]) == ExitCode.BAD_ARGUMENTS
    assert run(["verify"]) == ExitCode.BAD_ARGUMENTS


def test_help_exits_cleanly(capsys):
    assert run(["--help"]) == ExitCode.OK
    assert "Examples:" in capsys.readouterr().out


def test_suite_drawn_graphs():
    (result,) = run_suite(quick=True, only=[9])
    assert result.number == 9
    assert result.passed, result.detail


def test_suite_quick_subset(tmp_path):
    report = tmp_path / "suite.json"
    assert run(["--report", str(report), "suite", "--quick", "--only", "1", "--only", "6"]) == ExitCode.OK
    criteria = json.loads(report.read_text(encoding="utf-8"))["details"]["criteria"]
    assert [c["number"] for c in criteria] == [1, 6]


def test_quick_linear_time_judges_the_edit_ratio_only(monkeypatch):
    monkeypatch.setattr(settings, "SELFDUAL_LINEAR_TIME_BUDGET", 1e-9)
    passed, detail = linear_time(quick=True, seed=0)
    assert passed, detail
    assert "budget" not in detail


@pytest.mark.slow
def test_full_linear_time_enforces_the_budget(monkeypatch):
    monkeypatch.setattr(settings, "SELFDUAL_LINEAR_TIME_BUDGET", 1e-9)
    passed, detail = linear_time(quick=False, seed=0)
    assert not passed
    assert "budget" in detail and "n=100000" in detail


def test_missing_map_file_is_a_bad_argument(tmp_path):
    missing = tmp_path / "nope.json"
    assert run(["verify", "--self-dual", "--file", str(missing)]) == ExitCode.BAD_ARGUMENTS
    assert run(["fingerprint", "--h3", "--file", str(missing)]) == ExitCode.BAD_ARGUMENTS


def test_unwritable_output_is_a_bad_argument(tmp_path):
    target = tmp_path / "missing-dir" / "s.g6"
    assert run(["construct", "s", "--x", "5", "--y", "4", "--output", str(target)]) == ExitCode.BAD_ARGUMENTS
