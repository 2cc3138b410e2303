import json

import pandas as pd
import pytest
from click.testing import CliRunner

import ui.cli as cli_module
from core.state import CheckRecord, VerificationReport
from ui.cli import cli

FAST = ["--alpha", "0", "--kappa-grid", "0,1/2,1", "--nmax", "2", "--log-level", "WARNING"]


@pytest.fixture
def runner(clean_env):
    return CliRunner()


def test_unknown_suite_is_a_usage_error(runner):
    result = runner.invoke(cli, ["run-suite", "everything"])
    assert result.exit_code == 2


def test_invalid_alpha_is_a_usage_error(runner):
    result = runner.invoke(cli, ["run-suite", "uniqueness", "--alpha", "-2"])
    assert result.exit_code == 2


def test_run_suite_passes_and_writes_json(runner, clean_env):
    out = clean_env / "report.json"
    result = runner.invoke(cli, ["run-suite", "uniqueness", *FAST, "--out", str(out)])
    assert result.exit_code == 0, result.output
    payload = json.loads(out.read_text())
    assert payload["schema"] == "1"
    assert payload["suite"] == "uniqueness"
    assert payload["passed"] is True
    assert payload["summary"]["failed"] == 0


def test_reports_are_byte_identical(runner, clean_env):
    paths = [clean_env / "first.json", clean_env / "second.json"]
    for path in paths:
        assert runner.invoke(cli, ["run-suite", "uniqueness", *FAST, "--out", str(path)]).exit_code == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_csv_report(runner, clean_env):
    out = clean_env / "report.csv"
    result = runner.invoke(cli, ["run-suite", "uniqueness", *FAST, "--format", "csv", "--out", str(out)])
    assert result.exit_code == 0
    frame = pd.read_csv(out)
    assert set(frame["suite"]) == {"uniqueness"}
    assert frame["passed"].all()


def test_verification_failure_exits_one(runner, monkeypatch, clean_env):
    failing = VerificationReport("ortho", [CheckRecord("phi_norm", {}, 1, 2, True, False)])
    monkeypatch.setattr(cli_module, "run_suite", lambda name, config: failing)
    result = runner.invoke(cli, ["run-suite", "ortho", "--out", str(clean_env / "r.json")])
    assert result.exit_code == 1


def test_unwritable_output_exits_two(runner, clean_env):
    out = clean_env / "missing" / "table.csv"
    result = runner.invoke(cli, ["emit-table", "energy-levels", "--out", str(out)])
    assert result.exit_code == 2


def test_energy_level_table(runner, clean_env):
    out = clean_env / "energy.csv"
    result = runner.invoke(cli, ["emit-table", "energy-levels", "--out", str(out)])
    assert result.exit_code == 0
    frame = pd.read_csv(out)
    assert len(frame) == 18
    first = frame.iloc[0]
    assert (first["n"], first["l"], first["energy"]) == (0, 0, "-1/16")


def test_transform_matrix_table(runner, clean_env):
    out = clean_env / "matrix.csv"
    args = ["emit-table", "transform-matrix", "--alpha", "0", "--nmax", "4", "--mmax", "12", "--out", str(out)]
    result = runner.invoke(cli, args)
    assert result.exit_code == 0
    frame = pd.read_csv(out)
    assert frame.shape == (5, 14)
    assert list(frame["n"]) == [0, 1, 2, 3, 4]


def test_table_json_format(runner, clean_env):
    out = clean_env / "energy.json"
    result = runner.invoke(cli, ["emit-table", "energy-levels", "--format", "json", "--out", str(out)])
    assert result.exit_code == 0
    rows = json.loads(out.read_text())
    assert rows[0]["energy"] == "-1/16"
