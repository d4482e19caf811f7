import csv
import json

import pytest

from qkl.cli import main, parse_range

REPORT_KEYS = {"check", "params", "status", "witness", "residual_digits", "terms", "max_degree", "metadata", "config"}


def run(tmp_path, *argv):
    return main([*argv, "--out", str(tmp_path)])


def load(path):
    return json.loads(path.read_text())


def test_parse_range():
    assert parse_range("1..4") == [1, 2, 3, 4]
    assert parse_range("0,2,5") == [0, 2, 5]
    assert parse_range("3") == [3]


def test_verify_finite_grid(tmp_path):
    assert run(tmp_path, "verify-finite", "--n", "1..4", "--r", "0..2") == 0
    out = tmp_path / "verify-finite"
    summary = load(out / "summary.json")
    assert summary["total"] == 12 and summary["passed"] == 12 and summary["status"] == "pass"
    assert summary["config"]["grid"]["N"] == [1, 2, 3, 4]
    for entry in summary["checks"]:
        rep = load(out / entry["file"])
        assert set(rep) == REPORT_KEYS
        assert rep["status"] == "pass" and rep["witness"] == "0"
        assert "millis" in rep["metadata"]
        assert rep["config"] == summary["config"]


@pytest.mark.parametrize(
    "argv",
    [
        ["verify-finite", "--n", "0..2"],
        ["verify-finite", "--n", "3..1"],
        ["verify-finite", "--r", "x"],
        ["verify-proof", "--n", "5..4"],
        ["verify-proof", "--steps", "nonsense"],
        ["numeric", "--identity", "q-even", "--q", "1.0", "--x", "0.3"],
        ["numeric", "--identity", "q-even", "--q", "0"],
        ["numeric", "--identity", "unknown"],
        ["converge", "--q", "0.5,,abc"],
        ["limit-check", "--digits", "0"],
        ["verify-finite", "--jobs", "0"],
        ["no-such-command"],
    ],
)
def test_usage_errors_exit_2(tmp_path, argv, capsys):
    assert run(tmp_path, *argv) == 2


def test_missing_command_exit_2(capsys):
    assert main([]) == 2


def test_negative_controls_exit_1(tmp_path):
    assert run(tmp_path, "verify-finite", "--n", "1..2", "--r", "0", "--sabotage", "remainder-sign") == 1
    summary = load(tmp_path / "verify-finite" / "summary.json")
    assert summary["status"] == "fail" and summary["failed"] >= 1
    assert run(tmp_path, "verify-proof", "--steps", "s-telescope", "--n", "2..3", "--sabotage", "depth-minus-one") == 1
    assert run(tmp_path, "verify-proof", "--steps", "combination", "--n", "3..4", "--sabotage", "drop-lower") == 1


def test_verify_proof(tmp_path):
    assert run(tmp_path, "verify-proof", "--n", "2..5") == 0
    assert run(tmp_path, "verify-proof", "--steps", "partial-fraction", "--n", "2..12") == 0


def test_numeric_reports_residual(tmp_path):
    assert run(tmp_path, "numeric", "--identity", "q-even", "--q", "0.5", "--x", "0.333", "--digits", "25") == 0
    out = tmp_path / "numeric"
    [entry] = load(out / "summary.json")["checks"]
    rep = load(out / entry["file"])
    assert rep["residual_digits"] >= 23
    assert run(tmp_path, "numeric", "--identity", "main-bivariate", "--q", "0.5", "--x", "0.5", "--digits", "25") == 0


def test_converge_csv(tmp_path):
    assert run(tmp_path, "converge", "--r", "0..2", "--q", "0.5,0.9", "--digits", "30") == 0
    with open(tmp_path / "converge" / "converge.csv") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 6
    assert {"identity", "q", "r", "tolerance_digits", "terms_plain", "terms_accelerated", "millis_plain", "millis_accelerated"} <= set(rows[0])
    for row in rows:
        assert int(row["terms_accelerated"]) < int(row["terms_plain"])


def test_converge_markov_apery(tmp_path):
    assert run(tmp_path, "converge", "--identity", "markov-apery-classical", "--digits", "12") == 0
    with open(tmp_path / "converge" / "converge.csv") as fh:
        [row] = list(csv.DictReader(fh))
    assert int(row["terms_accelerated"]) <= 40
    assert row["terms_plain"] == "non-geometric"


def test_limit_check(tmp_path):
    assert run(tmp_path, "limit-check", "--r", "0..3", "--digits", "12") == 0
    assert run(tmp_path, "limit-check", "--markov-a", "0..3", "--digits", "10") == 0


def _reports(path):
    out = {}
    for f in sorted(path.glob("*.json")):
        body = load(f)
        body.pop("metadata", None)
        out[f.name] = body
    return out


def test_reports_are_reproducible(tmp_path):
    argv = ["verify-proof", "--steps", "k-telescope,partial-fraction", "--n", "2..4"]
    assert main([*argv, "--out", str(tmp_path / "a")]) == 0
    assert main([*argv, "--out", str(tmp_path / "b"), "--jobs", "2"]) == 0
    a = _reports(tmp_path / "a" / "verify-proof")
    b = _reports(tmp_path / "b" / "verify-proof")
    assert a.keys() == b.keys()
    for name in a:
        for body in (a[name], b[name]):
            body.get("config", {}).pop("output_dir", None)
            body.get("config", {}).pop("jobs", None)
            body.pop("checks", None) if name == "summary.json" else None
        assert a[name] == b[name]


def test_rerun_is_byte_identical(tmp_path):
    argv = ["verify-finite", "--n", "1..3", "--r", "0..1", "--out", str(tmp_path)]
    main(argv)
    first = {f.name: load(f) for f in (tmp_path / "verify-finite").glob("*.json")}
    main(argv)
    second = {f.name: load(f) for f in (tmp_path / "verify-finite").glob("*.json")}
    for body in (*first.values(), *second.values()):
        body.pop("metadata", None)
    assert first == second


def test_csv_and_text_formats(tmp_path, capsys):
    assert run(tmp_path, "verify-finite", "--n", "1..2", "--r", "0", "--format", "csv") == 0
    with open(tmp_path / "verify-finite" / "results.csv") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 2 and all(r["status"] == "pass" for r in rows)
    assert run(tmp_path / "t", "verify-finite", "--n", "1", "--r", "0", "--format", "text") == 0
    assert "1/1 checks passed" in capsys.readouterr().out


def test_env_output_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("QKL_OUTPUT_DIR", str(tmp_path / "env"))
    assert main(["verify-finite", "--n", "1", "--r", "0"]) == 0
    assert (tmp_path / "env" / "verify-finite" / "summary.json").exists()
