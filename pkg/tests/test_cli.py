import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from crlab import fixtures
from crlab.cli import COMMANDS, main, run

GOLDEN = Path(__file__).parent / "golden"

CASES = [
    ("verdict", "pipeline", [], 0),
    ("verdict", "heisenberg_identity", [], 0),
    ("verdict", "degenerate_identity", [], 2),
    ("essvar", "degenerate", [], 0),
    ("essvar", "quartic", ["--order", "lex"], 0),
    ("ftype", "flat", ["--max-length", "6"], 2),
    ("ftype", "quartic", [], 0),
    ("segre", "heisenberg", [], 0),
    ("gb", "quartic", ["--order", "lex"], 0),
    ("mapfinite", "pipeline", [], 0),
    ("mapfinite", "pipeline", ["--cap", "1"], 2),
    ("mapcheck", "pipeline", [], 0),
    ("preimage-check", "pipeline", [], 0),
    ("criterion", "degenerate_identity", [], 0),
]


def golden_name(command, fixture, extra):
    suffix = "".join(extra).replace("--", "_").replace("-", "_")
    return f"{command}_{fixture}{suffix}.json"


@pytest.mark.parametrize("command, fixture, extra, code", CASES)
def test_exit_codes_and_golden(command, fixture, extra, code, capsys):
    status = main([command, str(fixtures.path(fixture)), "--json", *extra])
    out = capsys.readouterr().out
    assert status == code
    report = json.loads(out)
    assert report["schema"] == 1 and report["command"] == command
    assert report["exit_code"] == code
    expected = (GOLDEN / golden_name(command, fixture, extra)).read_text(encoding="utf-8")
    assert out == expected


def test_verdict_payload():
    report = run("verdict", fixtures.load("pipeline")).as_dict()
    assert report["result"]["verdict"] == "CriterionSatisfied"
    assert report["result"]["finite_type"]["type"] == {"status": "FiniteType", "order": 4}


def test_flat_payload():
    report = run("ftype", fixtures.load("flat")).as_dict()
    assert report["result"]["type"]["status"] == "UndeterminedBeyond"


def test_coefficients_are_exact_strings():
    from crlab.problem import parse_problem

    prob = parse_problem("[source]\nvars = z, w\ndefining = w + ~w - 3/2*z*~z\n[options]\npoint = 1/2, 0\n")
    report = run("segre", prob).as_dict()
    assert report["result"]["point"] == ["1/2", "0"]
    assert report["result"]["ideal"]["basis"] == ["z - 4/3*w"]


def test_text_output(capsys):
    assert main(["ftype", str(fixtures.path("heisenberg"))]) == 0
    out = capsys.readouterr().out
    assert "status: FiniteType" in out and "order: 2" in out


def test_error_exit(tmp_path, capsys):
    bad = tmp_path / "bad.crp"
    bad.write_text("[source]\nvars = z, w\ndefining = w\n")
    assert main(["essvar", str(bad)]) == 1
    err = capsys.readouterr().err
    assert "reality" in err and "line 3" in err


def test_missing_file(capsys):
    assert main(["gb", "/nonexistent/problem.crp"]) == 1


def test_every_command_runs():
    prob = fixtures.load("pipeline")
    for command in COMMANDS:
        assert run(command, prob).exit_code in (0, 2)


def test_console_entry_point(tmp_path):
    env = dict(os.environ, PYTHONHASHSEED="123")
    proc = subprocess.run(
        [sys.executable, "-m", "crlab", "essvar", str(fixtures.path("degenerate")), "--json"],
        capture_output=True, text=True, env=env, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["dim"]["krull_dim"] == 1
