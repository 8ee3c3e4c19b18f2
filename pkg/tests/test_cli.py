import json
import subprocess
import sys

import pytest

from lieverify import checks, cli
from lieverify.report import VerificationReport


def run(argv, capsys):
    code = cli.run(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_eupo(capsys):
    code, out, _ = run(["verify", "eupo", "--n", "1", "--p", "5", "--cap", "60"], capsys)
    assert code == 0
    assert out.startswith("PASS")
    code, out, _ = run(["verify", "eupo", "--n", "1", "--p", "5", "--cap", "60", "--json"], capsys)
    assert json.loads(out)["status"] == "pass"


def test_series_chi_w_json(capsys):
    code, out, _ = run(["series", "chi-w", "--n", "1", "--p", "5", "--cap", "12", "--json"], capsys)
    assert code == 0
    assert json.loads(out) == [[2, 1], [9, 1], [10, 2], [11, 1]]


def test_series_text(capsys):
    code, out, _ = run(["series", "omega2", "--n", "1", "--p", "5", "--cap", "10"], capsys)
    assert code == 0
    assert out == "1 + t + t^8 + 2t^9 + t^10 + O(t^11)\n"


def test_bad_prime_exit_2(capsys):
    code, _, err = run(["verify", "all", "--n", "1", "--p", "4"], capsys)
    assert code == 2
    assert "p must be a prime ≥ 5" in err


@pytest.mark.parametrize("argv", [
    ["verify"],
    ["verify", "nosuch"],
    ["series", "omega2", "--cap", "0"],
    ["series", "omega2", "--n", "0"],
    ["oracle", "free-lie", "--oracle-cap", "-1"],
    ["verify", "eupo", "--cap", "ten"],
])
def test_usage_errors(argv, capsys):
    code, out, err = run(argv, capsys)
    assert code == 2
    assert out == "" and err


def test_guard_exit_3(capsys):
    code, out, err = run(["oracle", "free-lie", "--n", "1", "--p", "5", "--oracle-cap", "80"], capsys)
    assert code == 3
    assert "guard" in err and out == ""


def test_failing_check_exit_1(capsys, monkeypatch):
    def fake(name, n, p, cap=60, oracle_cap=None):
        return VerificationReport(name, {"n": n, "p": p, "cap": cap}, False,
                                  {"first_discrepancy_degree": 2})
    monkeypatch.setattr(checks, "run_check", fake)
    code, out, _ = run(["verify", "eupo", "--json"], capsys)
    assert code == 1
    assert json.loads(out)["status"] == "fail"


def test_oracle_output(capsys):
    code, out, _ = run(["oracle", "commutator", "--n", "1", "--p", "5", "--oracle-cap", "12",
                        "--json"], capsys)
    assert code == 0
    assert [d for d in json.loads(out) if d[1]] == [[2, 1], [9, 1], [10, 2], [11, 2], [12, 2]]


def test_verify_all_grid(capsys):
    code, out, _ = run(["verify", "all", "--json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert list(doc) == ["check", "params", "status", "detail"]
    assert doc["params"]["grid"] == [list(g) for g in checks.GRID]
    assert len(doc["detail"]["reports"]) == len(checks.GRID) * len(checks.CHECK_NAMES)


def test_verify_all_text(capsys):
    code, out, _ = run(["verify", "all", "--n", "1", "--p", "5"], capsys)
    assert code == 0
    assert f"{len(checks.CHECK_NAMES)}/{len(checks.CHECK_NAMES)} checks passed" in out
    assert "not verifiable" in out


@pytest.mark.parametrize("argv", [
    ["verify", "all", "--json"],
    ["verify", "sll", "--n", "2", "--p", "5", "--json"],
    ["verify", "homosl", "--json", "--oracle-cap", "12"],
    ["series", "f2k", "--k", "2", "--cap", "30", "--json"],
])
def test_json_round_trip_and_determinism(argv, capsys):
    _, first, _ = run(argv, capsys)
    _, second, _ = run(argv, capsys)
    assert first == second
    assert cli.dumps(json.loads(first)) + "\n" == first


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(["series", "chi-w", "--cap", "12", "--json", "--out", str(target)], capsys)
    assert code == 0 and out == ""
    assert json.loads(target.read_text(encoding="utf-8")) == [[2, 1], [9, 1], [10, 2], [11, 1]]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lieverify", "verify", "jacobi", "--json"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["status"] == "pass"
