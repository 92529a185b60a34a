import json
import subprocess
import sys

import pytest

from doublecayley.cli import main
from doublecayley.report import Report
from doublecayley.suites import SUITES, run_suite


def run(*args):
    return subprocess.run([sys.executable, "-m", "doublecayley", *args], capture_output=True, text=True)


def test_verify_degree(capsys):
    assert main(["verify", "degree"]) == 0
    out = capsys.readouterr().out
    assert "[PASS] deg DG (Schubert): expected 4836, got 4836" in out
    assert "[PASS] deg DG (Hilbert): expected 4836, got 4836" in out


def test_verify_json_shape(capsys):
    assert main(["verify", "fixed-points", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert set(data) == {"suite", "checks", "status"}
    count = next(c for c in data["checks"] if c["name"] == "count")
    assert count["expected"] == "36" and count["actual"] == "36"
    assert data["status"] == "pass"


def test_hilbert_kmax(capsys):
    assert main(["verify", "hilbert", "--kmax", "2", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    rows = [c for c in data["checks"] if c["name"].endswith("koszul/closed/G2")]
    assert [c["actual"] for c in rows] == ["[1, 1, 1]", "[50, 50, 50]", "[975, 975, 975]"]


def test_usage_errors():
    assert run("verify", "nonsense").returncode == 2
    assert run().returncode == 2
    assert run("verify", "degree", "--kmax", "x").returncode == 2
    assert run("eval", "spinor", "e17 + f3").returncode == 2


def test_failing_check_exit_code(monkeypatch, capsys):
    def broken(options=None):
        r = Report("degree")
        r.add("always wrong", 1, 2)
        return r

    monkeypatch.setitem(SUITES, "degree", broken)
    assert main(["verify", "degree"]) == 1
    assert "[FAIL] always wrong" in capsys.readouterr().out


def test_json_deterministic():
    a = run("verify", "orbit-types", "--json", "--seed", "5")
    b = run("verify", "orbit-types", "--json", "--seed", "5")
    assert a.stdout == b.stdout and a.stdout


def test_eval_commands(capsys):
    assert main(["eval", "spinor", "e123456 + 1 + e4567 + e1237"]) == 0
    assert capsys.readouterr().out.strip() == "1 + e1237 + e4567 + e123456"
    assert main(["eval", "spinor", "e1 - f7", "--as", "vector"]) == 0
    assert capsys.readouterr().out.strip() == "e1 - f7"
    assert main(["eval", "chow", "2*t1*t3^2 + 2*t1^2*t5 - 6*t1^4*t3 + 3*t1^7"]) == 0
    assert capsys.readouterr().out.strip() == "tau[6,1] + tau[5,2] + tau[4,3] + tau[4,2,1]"
    assert main(["eval", "chow", "tau[7]"]) == 2


def test_geometry_commands(capsys):
    assert main(["annihilator", "e14", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["dim"] == 7 and data["basis"][0] == "e1"
    assert main(["member", "(e1)"]) == 2
    capsys.readouterr()
    assert main(["member", "e14"]) == 0
    assert capsys.readouterr().out.strip() == "true"
    assert main(["member", "1"]) == 0
    assert capsys.readouterr().out.strip() == "false"
    assert main(["orbit-type", "e14"]) == 0
    assert capsys.readouterr().out.strip() == "(3, 3)"
    assert main(["orbit-type", "1"]) == 2
    assert main(["annihilator", "e1"]) == 2
    assert main(["annihilator", "0"]) == 2


def test_all_suite_order():
    names = list(SUITES)
    assert names[0] == "clifford-table" and names[-1] == "oracle-calibration"
    r = run_suite("clifford-table")
    assert r.passed and len(r.checks) == 15
