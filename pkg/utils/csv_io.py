"""
utils/csv_io.py
Reads and writes signal CSVs (t,re,im), result tables and run summaries.
"""
import json
import os

import numpy as np
import pandas as pd
from pydantic import ValidationError

import config
from errors import SignalFileError
from models import Signal, UniformGrid

SIGNAL_COLUMNS = ["t", "re", "im"]


def _ensure_parent(path):
    parent = os.path.dirname(os.path.abspath(path))
    os.makedirs(parent, exist_ok=True)


def read_signal_csv(path):
    """Load a t,re,im file onto the uniform grid its abscissae describe"""
    try:
        df = pd.read_csv(path)
    except FileNotFoundError:
        raise SignalFileError(f"missing input file: {path}")
    except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        raise SignalFileError(f"cannot read {path}: {e}")

    missing = [c for c in SIGNAL_COLUMNS if c not in df.columns]
    if missing:
        raise SignalFileError(f"{path}: missing columns {', '.join(missing)}")
    if len(df) < 2:
        raise SignalFileError(f"{path}: need at least two samples, found {len(df)}")

    try:
        values = df[SIGNAL_COLUMNS].to_numpy(dtype=float)
    except ValueError as e:
        raise SignalFileError(f"{path}: non-numeric entry ({e})")
    if not np.isfinite(values).all():
        row = int(np.flatnonzero(~np.isfinite(values).all(axis=1))[0])
        raise SignalFileError(f"{path}: non-finite value in row {row}")

    t = values[:, 0]
    step = (t[-1] - t[0]) / (len(t) - 1)
    spacing = np.diff(t)
    if step <= 0 or np.abs(spacing - step).max() > config.SPACING_RTOL * max(step, abs(t[-1]), abs(t[0])):
        raise SignalFileError(f"{path}: abscissae are not uniformly spaced")

    try:
        grid = UniformGrid(start=float(t[0]), step=float(step), count=len(t))
        return Signal(grid=grid, samples=values[:, 1] + 1j * values[:, 2])
    except ValidationError as e:
        raise SignalFileError(f"{path}: {e.errors()[0]['msg']}")


def write_signal_csv(signal, path):
    _ensure_parent(path)
    df = pd.DataFrame({"t": signal.t, "re": signal.samples.real, "im": signal.samples.imag})
    df.to_csv(path, index=False, float_format=config.CSV_FLOAT_FORMAT)
    return path


def write_table(df, path):
    """Any result table, same float format as signal files"""
    _ensure_parent(path)
    df.to_csv(path, index=False, float_format=config.CSV_FLOAT_FORMAT)
    return path


def write_json(payload, path):
    _ensure_parent(path)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(payload, f, indent=2, sort_keys=True, default=str)
    return path
