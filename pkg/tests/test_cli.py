import json
import subprocess
import sys

import pytest

from liftlog.cli import load_fixtures, main, run_command

STAIRCASE = "ring x,y; x^10, x^8*y, x*y^4, y^5"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--format", "json", *argv)
    return code, json.loads(out)


def test_report_shape(capsys):
    code, data = run_json(capsys, "ideal", "show", "-I", STAIRCASE)
    assert code == 0
    assert set(data) == {"command", "ring", "inputs", "outputs", "citations", "discrepancy_flags", "verification"}
    assert data["outputs"]["result"] == "(x^10, x^8*y, x*y^4, y^5)"


@pytest.mark.parametrize("argv,path,want", [
    (["ideal", "radical", "-I", STAIRCASE], ("result",), "(x, y)"),
    (["ideal", "power", "-I", "ring x,y; x,y", "-k", "2"], ("result",), "(x^2, x*y, y^2)"),
    (["ideal", "quotient", "-I", "ring x,y; x^2, x*y", "-J", "x"], ("result",), "(x, y)"),
    (["closure", "rr", "-I", STAIRCASE], ("closure_text",), "(x^10, x^8*y, x^7*y^2, x^6*y^3, x*y^4, y^5)"),
    (["closure", "integral", "-I", STAIRCASE], ("closure_text",), "(x^10, x^8*y, x^6*y^2, x^4*y^3, x*y^4, y^5)"),
    (["der", "module", "-I", STAIRCASE], ("module", "text"), "(x,y^3)∂x + (x^7,y)∂y"),
    (["der", "log", "-w", "4,9", "-I", "ring x,y; x,y"], ("module", "text"), "(x,y)∂x + (x^3,y)∂y"),
    (["lift", "blowup", "-I", STAIRCASE], ("L", "text"), "(x,y)∂x + (x^3,y)∂y"),
    (["lift", "chart", "--map", "y1 = x1; y2 = x1^2*x2", "--critical", "x1"], ("module", "text"),
     "(y1,y2)∂y1 + (y1^2,y2)∂y2"),
])
def test_command_values(capsys, argv, path, want):
    code, data = run_json(capsys, *argv)
    assert code == 0
    got = data["outputs"]
    for p in path:
        got = got[p]
    assert got == want


def test_verify_passes(capsys):
    for argv in (["lift", "blowup", "-I", STAIRCASE],
                 ["lift", "chart", "--map", "y1 = x1; y2 = x1^3*x2", "--critical", "x1"],
                 ["der", "log", "-w", "4,9", "-I", "ring x,y; x,y", "--chart", "x = x; y = x^2*s",
                  "--target-weight", "4,1"]):
        code, data = run_json(capsys, "--verify", *argv)
        assert code == 0 and data["verification"]["ran"] and data["verification"]["ok"]
        assert data["verification"]["checks"]


def test_weighted_log_module_is_flagged(capsys):
    _, data = run_json(capsys, "der", "log", "-w", "4,9", "-I", "ring x,y; x,y")
    assert "weighted-log-module" in {f["id"] for f in data["discrepancy_flags"]}


def test_chart_check_reports_lift(capsys):
    _, data = run_json(capsys, "lift", "chart", "--map", "y1 = x1; y2 = x1^2*x2", "--critical", "x1",
                       "--check", "y1*dy2", "--check", "y1^2∂y2")
    checks = data["outputs"]["checks"]
    assert [c["lifts_regularly"] for c in checks] == [False, True]
    assert [c["in_module"] for c in checks] == [False, True]


def test_semigroup_commands(capsys):
    _, data = run_json(capsys, "sgr", "--gens", "4,5,6,7", "tangent", "--ideal", "4,5,6,7")
    assert data["outputs"]["orders"]["generators"] == [1, 2, 3, 4]
    _, data = run_json(capsys, "sgr", "--gens", "2,3", "ring")
    assert data["outputs"]["orders"]["generators"] == [1, 2]


def test_text_output(capsys):
    code, out, _ = run(capsys, "der", "module", "-I", STAIRCASE)
    assert code == 0 and "(x,y^3)∂x + (x^7,y)∂y" in out


@pytest.mark.parametrize("argv", [
    [],
    ["ideal", "bogus", "-I", "x"],
    ["ideal", "show", "-I", "ring x; y"],
    ["ideal", "show", "-I", "ring x,y; x^"],
    ["lift", "chart", "--critical", "x1"],
    ["lift", "chart", "--map", "y1 = x1; y2 = x1*x2", "--critical", "zz"],
    ["lift", "chart", "--map", "y1 = x1^2; y2 = x1^4", "--critical", "x1"],
    ["der", "log", "-w", "0,0", "-I", "ring x,y; x"],
    ["sgr", "--gens", "4,6", "ring"],
])
def test_usage_errors_exit_one(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1 and err


def test_verification_failure_exits_two(tmp_path, capsys):
    fx = {"name": "wrong_on_purpose", "description": "expects a false value",
          "runs": [{"argv": ["ideal", "radical", "-I", "ring x,y; x^2"], "expect": {"outputs.result": "(y)"}}]}
    (tmp_path / "wrong.json").write_text(json.dumps(fx))
    code, out, _ = run(capsys, "verify-corpus", "--fixtures", str(tmp_path))
    assert code == 2 and "FAIL" in out.upper()


def test_bundled_corpus_passes(capsys):
    code, data = run_json(capsys, "verify-corpus")
    assert code == 0
    assert data["outputs"]["runs"] == sum(len(fx["runs"]) for fx in load_fixtures())


def test_json_is_deterministic_and_round_trips(capsys):
    argv = ["lift", "blowup", "-I", STAIRCASE]
    _, first, _ = run(capsys, "--format", "json", *argv)
    _, second, _ = run(capsys, "--format", "json", *argv)
    assert first == second
    data, _ = run_command(["--format", "json"] + argv)
    assert json.loads(first) == json.loads(json.dumps(data, ensure_ascii=False, sort_keys=True))


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "liftlog", "--version"], capture_output=True, text=True)
    assert proc.returncode == 0 and "liftlog" in proc.stdout
