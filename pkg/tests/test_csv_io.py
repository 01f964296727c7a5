import json

import numpy as np
import pandas as pd
import pytest

import config
from errors import SignalFileError
from models import Signal, UniformGrid
from utils.csv_io import read_signal_csv, write_json, write_signal_csv, write_table


def _write(path, rows):
    pd.DataFrame(rows).to_csv(path, index=False)
    return str(path)


def test_signal_file_preserves_samples(tmp_path, gaussian):
    f = gaussian.with_samples(gaussian.samples * np.exp(0.3j * gaussian.t))
    path = write_signal_csv(f, str(tmp_path / "nested" / "f.csv"))
    back = read_signal_csv(path)
    assert back.grid.same_as(f.grid, rtol=1e-12)
    assert np.abs(back.samples - f.samples).max() < 1e-14


def test_signal_file_format(tmp_path):
    f = Signal(grid=UniformGrid(start=0.0, step=0.5, count=2), samples=[1.0, 1j])
    path = write_signal_csv(f, str(tmp_path / "f.csv"))
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    assert lines[0] == "t,re,im"
    assert lines[2] == "5.000000000000000e-01,0.000000000000000e+00,1.000000000000000e+00"


def test_missing_file(tmp_path):
    with pytest.raises(SignalFileError) as exc:
        read_signal_csv(str(tmp_path / "absent.csv"))
    assert exc.value.exit_code == config.EXIT_IO


@pytest.mark.parametrize("rows", [
    {"t": [0.0, 1.0], "re": [1.0, 2.0]},
    {"t": [0.0], "re": [1.0], "im": [0.0]},
    {"t": [0.0, 1.0, 3.0], "re": [1.0, 2.0, 3.0], "im": [0.0, 0.0, 0.0]},
    {"t": [0.0, 1.0, 2.0], "re": [1.0, float("nan"), 3.0], "im": [0.0, 0.0, 0.0]},
    {"t": [0.0, 1.0, 2.0], "re": ["a", "b", "c"], "im": [0.0, 0.0, 0.0]},
    {"t": [2.0, 1.0, 0.0], "re": [1.0, 2.0, 3.0], "im": [0.0, 0.0, 0.0]},
])
def test_malformed_signal_files(tmp_path, rows):
    with pytest.raises(SignalFileError):
        read_signal_csv(_write(tmp_path / "bad.csv", rows))


def test_table_and_summary(tmp_path):
    table = write_table(pd.DataFrame({"eps": [0.1], "l1_error": [0.25]}), str(tmp_path / "t.csv"))
    assert open(table, encoding="utf-8").read().splitlines()[1] == "1.000000000000000e-01,2.500000000000000e-01"
    summary = write_json({"b": 1, "a": [1, 2]}, str(tmp_path / "s.json"))
    text = open(summary, encoding="utf-8").read()
    assert text.index('"a"') < text.index('"b"')
    assert json.loads(text) == {"a": [1, 2], "b": 1}
