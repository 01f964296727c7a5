import math

import numpy as np
import pytest
from pydantic import ValidationError

from errors import GridMismatchError, InvalidExponentError, NonFiniteSampleError
from models import LpExponent, Signal, UniformGrid
from signal_core import (
    as_exponent,
    boundary_magnitude,
    default_output_grid,
    inner_product,
    integrate,
    lp_norm,
    make_signal,
    reflect,
    relative_l2_error,
    resample,
    staggered_grid,
    symmetric_grid,
    trapezoid_weights,
)


def test_grid_rejects_bad_parameters():
    with pytest.raises(ValidationError):
        UniformGrid(start=0.0, step=0.0, count=4)
    with pytest.raises(ValidationError):
        UniformGrid(start=math.nan, step=0.1, count=4)
    with pytest.raises(ValidationError):
        UniformGrid(start=0.0, step=0.1, count=0)


def test_grid_spec_and_half_width():
    grid = UniformGrid(start=-2.0, step=0.5, count=7)
    assert grid.end == 1.0
    assert grid.half_width == 2.0
    assert grid.spec() == "-2.0:0.5:7"


def test_signal_validates_length_and_finiteness():
    grid = UniformGrid(start=0.0, step=1.0, count=3)
    with pytest.raises(ValidationError):
        Signal(grid=grid, samples=[1.0, 2.0])
    with pytest.raises(ValidationError):
        Signal(grid=grid, samples=[1.0, math.inf, 2.0])


def test_signal_samples_are_read_only(gaussian):
    with pytest.raises(ValueError):
        gaussian.samples[0] = 2.0


def test_make_signal_reports_first_non_finite_index():
    grid = UniformGrid(start=-1.0, step=0.5, count=5)
    with pytest.raises(NonFiniteSampleError) as exc:
        make_signal(grid, lambda t: 1.0 / np.abs(t))
    assert "index 2" in str(exc.value)


def test_trapezoid_weights():
    grid = UniformGrid(start=0.0, step=0.25, count=5)
    w = trapezoid_weights(grid)
    assert w[0] == w[-1] == 0.125
    assert w.sum() == pytest.approx(1.0)
    assert trapezoid_weights(UniformGrid(start=0.0, step=0.25, count=1)).tolist() == [0.25]


def test_gaussian_norms(gaussian):
    assert integrate(gaussian) == pytest.approx(1.0, abs=1e-12)
    assert lp_norm(gaussian, 1) == pytest.approx(1.0, abs=1e-12)
    assert lp_norm(gaussian, 2) == pytest.approx(2 ** -0.25, abs=1e-12)
    assert lp_norm(gaussian, math.inf) == pytest.approx(1.0)


EXPONENTS = [1.0, 4.0 / 3.0, 2.0, math.inf]


def _random_signal(rng, grid):
    return Signal(grid=grid, samples=rng.standard_normal(grid.count) + 1j * rng.standard_normal(grid.count))


@pytest.mark.parametrize("a, b", [(3.0, 2.0), (-1.5, 0.0), (0.0, -4.0)])
def test_trapezoid_is_exact_on_lines(a, b):
    grid = UniformGrid(start=-1.3, step=0.1, count=31)
    lo, hi = grid.start, grid.end
    exact = a * (hi ** 2 - lo ** 2) / 2.0 + b * (hi - lo)
    assert integrate(make_signal(grid, lambda t: a * t + b)).real == pytest.approx(exact, abs=1e-12)


@pytest.mark.parametrize("p", EXPONENTS)
def test_lp_norm_is_homogeneous(p):
    f = _random_signal(np.random.default_rng(7), symmetric_grid(2.0, 1.0 / 32))
    c = -2.0 + 1.5j
    scaled = f.with_samples(c * f.samples)
    assert lp_norm(scaled, p) == pytest.approx(abs(c) * lp_norm(f, p), rel=1e-13)


@pytest.mark.parametrize("p", EXPONENTS)
def test_lp_norm_triangle_inequality(p):
    rng = np.random.default_rng(11)
    grid = symmetric_grid(2.0, 1.0 / 32)
    for _ in range(20):
        f, g = _random_signal(rng, grid), _random_signal(rng, grid)
        total = f.with_samples(f.samples + g.samples)
        assert lp_norm(total, p) <= (lp_norm(f, p) + lp_norm(g, p)) * (1 + 1e-12)


def test_exponents():
    assert LpExponent(p=4.0).dual == pytest.approx(4.0 / 3.0)
    assert LpExponent(p=1.0).dual == math.inf
    assert LpExponent(p=math.inf).dual == 1.0
    with pytest.raises(InvalidExponentError):
        as_exponent(0.5)
    with pytest.raises(InvalidExponentError):
        lp_norm(Signal(grid=UniformGrid(start=0.0, step=1.0, count=2), samples=[1, 1]), math.nan)


def test_inner_product_has_no_conjugate(grid):
    f = make_signal(grid, lambda t: 1j * np.exp(-math.pi * t ** 2))
    assert inner_product(f, f) == pytest.approx(-(2 ** -0.5), abs=1e-12)


def test_mismatched_grids_are_rejected(gaussian, fine_gaussian):
    with pytest.raises(GridMismatchError):
        inner_product(gaussian, fine_gaussian)
    with pytest.raises(GridMismatchError):
        relative_l2_error(gaussian, fine_gaussian)


def test_symmetric_and_staggered_grids():
    sym = symmetric_grid(2.0, 0.25)
    assert sym.count == 17
    assert 0.0 in sym.points
    stag = staggered_grid(2.0, 0.25)
    assert stag.count == 16
    assert not np.any(stag.points == 0.0)
    assert stag.start == -stag.end


def test_default_output_grid_keeps_extent_and_step(gaussian):
    out = default_output_grid(gaussian)
    assert out.same_as(gaussian.grid)


def test_resample_uses_profile_when_known(gaussian, fine_grid):
    fine = resample(gaussian, fine_grid)
    expected = np.exp(-math.pi * fine_grid.points ** 2)
    assert np.abs(fine.samples - expected).max() < 1e-15


def test_resample_spline_and_zero_outside(gaussian):
    bare = Signal(grid=gaussian.grid, samples=gaussian.samples)
    target = UniformGrid(start=-7.0, step=0.01, count=1401)
    out = resample(bare, target)
    inside = np.abs(target.points) <= 6.0
    expected = np.exp(-math.pi * target.points ** 2)
    assert np.abs(out.samples[inside] - expected[inside]).max() < 1e-7
    assert np.all(out.samples[~inside] == 0.0)


def test_reflect():
    grid = UniformGrid(start=0.0, step=0.5, count=3)
    f = Signal(grid=grid, samples=[1.0, 2.0, 3.0])
    r = reflect(f)
    assert r.grid.start == -1.0
    assert r.samples.tolist() == [3.0, 2.0, 1.0]


def test_boundary_magnitude():
    f = Signal(grid=UniformGrid(start=0.0, step=1.0, count=3), samples=[0.5, 9.0, -2.0])
    assert boundary_magnitude(f) == 2.0
