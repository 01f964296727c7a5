import math

import numpy as np
import pytest

from frft_engine import angle_context
from models import MultiplierFn, Signal
from preconditions import (
    check_boundary_decay,
    check_kernel_mass,
    check_sup_bound,
    resolution_bound,
    validate_resolution,
)
from signal_core import symmetric_grid


def test_resolution_bound_at_quarter_turn(grid):
    ctx = angle_context(math.pi / 2)
    assert resolution_bound(grid, ctx, grid) == pytest.approx(0.25 + 6.0 / 128)
    assert validate_resolution(grid, ctx, grid) == (True, "PASSED")


def test_resolution_fails_on_wide_output(grid):
    ok, reason = validate_resolution(grid, angle_context(1.0), symmetric_grid(200.0, 1.0))
    assert not ok
    assert reason.startswith("Resolution bound")


def test_declared_bandwidth_counts(grid):
    ctx = angle_context(math.pi / 2)
    assert resolution_bound(grid, ctx, grid, bandwidth=0.0) == pytest.approx(6.0 / 128)
    assert not validate_resolution(grid, ctx, grid, bandwidth=64.0)[0]


def test_boundary_decay(gaussian):
    assert check_boundary_decay(gaussian) == (True, "PASSED")
    flat = Signal(grid=symmetric_grid(1.0, 0.25), samples=np.ones(9))
    assert not check_boundary_decay(flat)[0]
    silent = Signal(grid=symmetric_grid(1.0, 0.25), samples=np.zeros(9))
    assert check_boundary_decay(silent)[0]


def test_kernel_mass():
    assert check_kernel_mass(1.0005)[0]
    ok, reason = check_kernel_mass(1.01)
    assert not ok
    assert "Kernel mass" in reason


def test_sup_bound():
    probes = np.linspace(-3.0, 3.0, 13)
    liar = MultiplierFn(evaluator=lambda x: 2.0 * np.ones_like(x), sup_bound=1.0, name="liar")
    ok, reason = check_sup_bound(liar, probes)
    assert not ok
    assert reason.startswith("|liar(")
    honest = MultiplierFn(evaluator=lambda x: np.cos(x), sup_bound=1.0)
    assert check_sup_bound(honest, probes) == (True, "PASSED")
