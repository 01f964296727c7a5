import json
import math
import os

import numpy as np

import config
from experiment_runner import ExperimentRunner, errors_decreasing, recovery_file_name, recovery_table
from models import EpsilonSchedule, MeanKind, RecoveryRow
from signal_core import make_signal, staggered_grid


def _gaussian(t):
    return np.exp(-math.pi * np.asarray(t, dtype=float) ** 2)


def _row(eps, error, gaussian):
    return RecoveryRow(eps=eps, heat_parameter=eps ** 2, signal=gaussian, l1_error=error)


def test_recovery_file_name_uses_repr():
    assert recovery_file_name(1.0) == "recover_eps1.0.csv"
    assert recovery_file_name(0.01) == "recover_eps0.01.csv"


def test_errors_decreasing(gaussian):
    assert errors_decreasing([_row(1.0, 0.3, gaussian), _row(0.1, 0.1, gaussian)])
    assert not errors_decreasing([_row(1.0, 0.3, gaussian), _row(0.1, 0.3, gaussian)])
    assert not errors_decreasing([_row(1.0, None, gaussian)])


def test_recovery_table_columns(gaussian):
    table = recovery_table([_row(0.5, 0.2, gaussian)])
    assert list(table.columns) == ["eps", "heat_parameter", "l1_error"]
    assert table.loc[0, "heat_parameter"] == 0.25


def test_run_recovery_writes_results(tmp_path, capsys):
    time_grid = staggered_grid(4.0, 1.0 / 64)
    transformed = make_signal(staggered_grid(8.0, 1.0 / 64), _gaussian)
    reference = make_signal(time_grid, _gaussian)
    runner = ExperimentRunner(output_dir=str(tmp_path), run_config={"command": "recover"})

    rows = runner.run_recovery(transformed, math.pi / 4, MeanKind.GAUSS,
                               EpsilonSchedule(values=(1.0, 0.1, 0.01)), time_grid, reference)

    assert len(rows) == 3
    assert sorted(os.listdir(tmp_path)) == sorted([
        "recover_eps1.0.csv", "recover_eps0.1.csv", "recover_eps0.01.csv",
        config.RECOVERY_TABLE_FILE, config.RUN_SUMMARY_FILE,
    ])
    with open(tmp_path / config.RUN_SUMMARY_FILE, encoding="utf-8") as f:
        summary = json.load(f)
    assert summary["config"] == {"command": "recover"}
    assert summary["errors_decreasing"] is True
    assert "RECOVERY COMPLETE" in capsys.readouterr().out
