import json

import pytest
from click.testing import CliRunner

from fullcycle.cli import EXIT_INPUT_ERROR, EXIT_OK, EXIT_VERIFICATION_FAILED, cli
from fullcycle.corpus.reports import read_csv_rows


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def c20_file(runner, tmp_path):
    path = tmp_path / "c20.pc"
    result = runner.invoke(cli, ["generate", "nanotube", "--k", "0", "--out", str(path)])
    assert result.exit_code == EXIT_OK, result.output
    return path


def test_generate_json(runner, tmp_path):
    path = tmp_path / "c40.json"
    result = runner.invoke(cli, ["generate", "nanotube", "--k", "2", "--out", str(path), "--format", "json"])
    assert result.exit_code == EXIT_OK
    assert json.loads(path.read_text())["n"] == 40


def test_generate_negative_k(runner, tmp_path):
    result = runner.invoke(cli, ["generate", "nanotube", "--k", "-1", "--out", str(tmp_path / "x.pc")])
    assert result.exit_code == EXIT_INPUT_ERROR


def test_validate(runner, c20_file):
    result = runner.invoke(cli, ["validate", str(c20_file)])
    assert result.exit_code == EXIT_OK
    assert "three_connected" in result.output


def test_validate_malformed_file(runner, tmp_path):
    bad = tmp_path / "bad.pc"
    bad.write_bytes(b">>planar_code<<\x14\x02\x05")
    result = runner.invoke(cli, ["validate", str(bad)])
    assert result.exit_code == EXIT_INPUT_ERROR


def test_solve(runner, c20_file, tmp_path):
    out = tmp_path / "cycles.json"
    result = runner.invoke(cli, ["solve", str(c20_file), "--out", str(out)])
    assert result.exit_code == EXIT_OK
    cycles = json.loads(out.read_text())
    assert cycles[0]["length"] == 20
    assert cycles[0]["optimal"] is True


def test_verify_writes_reports(runner, c20_file, tmp_path):
    prefix = tmp_path / "report"
    result = runner.invoke(cli, ["verify", str(c20_file), "--out", str(prefix)])
    assert result.exit_code == EXIT_OK, result.output

    payload = json.loads((tmp_path / "report.json").read_text())
    rows = read_csv_rows(tmp_path / "report.csv")
    assert payload["ok"] is True
    assert rows[0]["length"] == "20"
    assert rows[0]["bound"] == "16"
    assert rows[0]["bound_ok"] == "true"
    assert payload["rows"][0]["graph_id"] == rows[0]["graph_id"] == "c20"


def test_verify_with_forbid(runner, c20_file):
    result = runner.invoke(cli, ["verify", str(c20_file), "--forbid", "0,1"])
    assert result.exit_code == EXIT_OK
    assert "length 17" in result.output


def test_verify_bad_forbid(runner, c20_file):
    result = runner.invoke(cli, ["verify", str(c20_file), "--forbid", "a,b"])
    assert result.exit_code == EXIT_INPUT_ERROR


def test_verify_bad_budget(runner, c20_file):
    result = runner.invoke(cli, ["verify", str(c20_file), "--budget-nodes", "0"])
    assert result.exit_code == EXIT_INPUT_ERROR


def test_verify_run_file(runner, c20_file, tmp_path):
    run_file = tmp_path / "run.yaml"
    run_file.write_text("run:\n  forbid: [0, 1]\n  radius: 0\n  budget:\n    secs: 30\n")
    result = runner.invoke(cli, ["verify", str(c20_file), "--config", str(run_file)])
    assert result.exit_code == EXIT_OK
    assert "length 17" in result.output


def test_oracle_check(runner, c20_file):
    result = runner.invoke(cli, ["oracle-check", str(c20_file)])
    assert result.exit_code == EXIT_OK
    assert "no discrepancies" in result.output


def test_oracle_check_injected_fault(runner, c20_file):
    result = runner.invoke(cli, ["oracle-check", str(c20_file), "--inject-fault"])
    assert result.exit_code == EXIT_VERIFICATION_FAILED


def test_missing_input(runner, tmp_path):
    result = runner.invoke(cli, ["verify", str(tmp_path / "nope.pc")])
    assert result.exit_code == EXIT_INPUT_ERROR


def test_version(runner):
    result = runner.invoke(cli, ["version"])
    assert result.exit_code == EXIT_OK
    assert "14" in result.output
