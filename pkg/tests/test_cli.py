import json
import subprocess
import sys

import pytest

from invmodel.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, Report, RunConfig, main
from invmodel.report import Check


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_verify_n4(capsys):
    code, doc = run_json(capsys, "verify", "--n", "4")
    assert code == EXIT_OK
    assert doc["schema_version"] == 1
    assert doc["passed"] is True
    assert doc["data"]["p_n"] == 5
    assert doc["data"]["sum_degrees"] == 10
    assert all(c["status"] == "pass" for c in doc["checks"])


def test_verify_n1_text(capsys):
    code, out, _ = run(capsys, "verify", "--n", "1")
    assert code == EXIT_OK
    assert "ALL CHECKS PASSED" in out


def test_verify_n10_rows_sum_to_one(capsys):
    code, doc = run_json(capsys, "verify", "--n", "10")
    assert code == EXIT_OK
    rows = doc["data"]["multiplicities"]["rows"]
    assert len(rows) == 42
    assert all(r["row_sum"] == 1 for r in rows)
    assert doc["skipped"]


def test_dims(capsys):
    code, doc = run_json(capsys, "dims", "--n", "4")
    assert code == EXIT_OK
    rows = [(r["j"], r["dim_V"], r["dim_End"]) for r in doc["data"]["rows"]]
    assert rows == [(0, 1, 1), (1, 6, 2), (2, 3, 2)]
    assert (doc["data"]["totals"]["dim_V"], doc["data"]["totals"]["dim_End"]) == (10, 5)

    _, doc = run_json(capsys, "dims", "--n", "2")
    assert [(r["j"], r["dim_V"], r["dim_End"]) for r in doc["data"]["rows"]] == [(0, 1, 1), (1, 1, 1)]
    assert doc["data"]["totals"]["dim_V"] == doc["data"]["totals"]["dim_End"] == 2

    _, doc = run_json(capsys, "dims", "--n", "8")
    assert doc["data"]["totals"]["dim_End"] == 22 == doc["data"]["totals"]["p_n"]


@pytest.mark.parametrize(
    "n,j,k,total,consistent",
    [(4, 1, 1, 3, 2), (2, 0, 1, 1, 0), (3, 0, 0, 1, 1)],
)
def test_orbits(capsys, n, j, k, total, consistent):
    code, doc = run_json(capsys, "orbits", "--n", str(n), "--j", str(j), "--k", str(k))
    assert code == EXIT_OK
    orbits = doc["data"]["orbits"]
    assert len(orbits) == total
    assert sum(o["consistent"] for o in orbits) == consistent


def test_orbits_n4_partitions(capsys):
    _, doc = run_json(capsys, "orbits", "--n", "4", "--j", "1", "--k", "1")
    flags = {tuple(o["numerical_partition"]): o["consistent"] for o in doc["data"]["orbits"]}
    assert flags == {(2, 1, 1): True, (3, 1): True, (2, 2): False}


@pytest.mark.parametrize("n,rows", [(1, 1), (4, 5), (6, 11)])
def test_decompose(capsys, n, rows):
    code, doc = run_json(capsys, "decompose", "--n", str(n))
    assert code == EXIT_OK
    assert len(doc["data"]["rows"]) == rows
    assert all(r["row_sum"] == 1 for r in doc["data"]["rows"])
    assert all(set(r["multiplicities"]) <= {0, 1} for r in doc["data"]["rows"])


def test_decompose_text(capsys):
    code, out, _ = run(capsys, "decompose", "--n", "4")
    assert code == EXIT_OK
    assert "4=2+2" in out and "j=2" in out


def test_character(capsys):
    code, doc = run_json(capsys, "character", "--n", "3")
    assert code == EXIT_OK
    assert doc["data"]["classes"] == ["3=3", "3=2+1", "3=1+1+1"]
    assert doc["data"]["model"] == [{"j": 0, "values": [1, 1, 1]}, {"j": 1, "values": [0, -1, 3]}]
    assert doc["data"]["irreducible"][1] == {"partition": "3=2+1", "values": [-1, 0, 2]}
    _, doc = run_json(capsys, "character", "--n", "4", "--j", "2")
    assert [m["j"] for m in doc["data"]["model"]] == [2]


@pytest.mark.parametrize(
    "argv",
    [
        ["dims", "--n", "0"],
        ["orbits", "--n", "4", "--j", "1"],
        ["orbits", "--n", "4", "--j", "3", "--k", "1"],
        ["verify", "--n", "4", "--seed", "-1"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_USAGE
    assert "error" in err


def test_argparse_errors_use_usage_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["dims"])
    assert exc.value.code == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main(["nonsense", "--n", "3"])
    assert exc.value.code == EXIT_USAGE


def test_failed_check_exit_code():
    report = Report(RunConfig("verify", 3), [Check("x", False, 1, 0)], {})
    assert not report.passed
    assert '"status": "fail"' in report.to_json()


def test_failure_propagates_to_exit_code(capsys, monkeypatch):
    import invmodel.cli as cli

    def broken(cfg):
        return Report(cfg, [Check("forced", False, 1, 0)], {})

    monkeypatch.setitem(cli.COMMANDS, "dims", (broken, "broken"))
    code, out, _ = run(capsys, "dims", "--n", "3")
    assert code == EXIT_FAILED
    assert "[FAIL] forced" in out


@pytest.mark.parametrize("cmd", ["verify", "dims", "decompose", "character"])
def test_json_is_deterministic(capsys, cmd):
    _, first, _ = run(capsys, cmd, "--n", "6", "--format", "json", "--seed", "11")
    _, second, _ = run(capsys, cmd, "--n", "6", "--format", "json", "--seed", "11")
    assert first == second


def test_timings_flag(capsys):
    _, doc = run_json(capsys, "dims", "--n", "3", "--timings")
    assert all("elapsed_ms" in c for c in doc["checks"])
    _, doc = run_json(capsys, "dims", "--n", "3")
    assert all("elapsed_ms" not in c for c in doc["checks"])


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "invmodel", "dims", "--n", "3"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert "ALL CHECKS PASSED" in proc.stdout
