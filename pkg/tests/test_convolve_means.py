import math

import numpy as np
import pytest
from pydantic import ValidationError
from scipy.integrate import trapezoid

import config
from convolve_means import (
    approx_identity_error,
    classical_convolve,
    convolution_kernel_grid,
    dilate,
    frac_convolve,
    mean_via_convolution,
    phi_mean,
    poisson_kernel,
    poisson_truncation_mass,
    recover,
    sampled_kernel,
    weierstrass_kernel,
)
from errors import EmptyScheduleError, GridMismatchError, InvalidParameterError, MassConditionWarning
from models import MeanKind, MeanSpec, Signal, UniformGrid
from reference_signals import exp_chirp_pair
from signal_core import (
    integrate,
    lp_norm,
    make_signal,
    relative_l2_error,
    staggered_grid,
    symmetric_grid,
    trapezoid_weights,
)


def _gaussian(t):
    return np.exp(-math.pi * np.asarray(t, dtype=float) ** 2)


def test_kernels_have_unit_mass():
    grid = symmetric_grid(400.0, 1.0 / 16)
    assert integrate(weierstrass_kernel(0.5, grid)).real == pytest.approx(1.0, abs=1e-12)
    mass = integrate(poisson_kernel(1.0, grid)).real
    assert mass == pytest.approx(1.0 - poisson_truncation_mass(1.0, grid), abs=1e-6)


def test_poisson_truncation_mass():
    grid = symmetric_grid(50.0, 0.5)
    assert poisson_truncation_mass(1.0, grid) == pytest.approx(1.0 - 2.0 * math.atan(50.0) / math.pi)
    with pytest.raises(InvalidParameterError):
        poisson_truncation_mass(0.0, grid)


@pytest.mark.parametrize("kind", [MeanKind.ABEL, MeanKind.GAUSS])
def test_cell_averaged_kernels_keep_mass_below_the_step(kind):
    grid = symmetric_grid(8.0, 1.0 / 64)
    kernel = sampled_kernel(MeanSpec(kind=kind, epsilon=1e-3), grid)
    assert integrate(kernel).real == pytest.approx(1.0, abs=1e-3)


def test_custom_kernel_needs_kernel_profile():
    spec = MeanSpec(kind=MeanKind.CUSTOM, epsilon=0.1, phi=lambda y: np.exp(-np.abs(y)))
    with pytest.raises(InvalidParameterError):
        sampled_kernel(spec, symmetric_grid(1.0, 0.1))


def test_custom_phi_must_be_one_at_origin():
    with pytest.raises(ValidationError):
        MeanSpec(kind=MeanKind.CUSTOM, epsilon=0.1, phi=lambda y: 2.0 + 0 * y)
    with pytest.raises(ValidationError):
        MeanSpec(kind=MeanKind.CUSTOM, epsilon=0.1)


def test_heat_parameter():
    assert MeanSpec(kind=MeanKind.GAUSS, epsilon=0.1).heat_parameter == pytest.approx(0.01)
    assert MeanSpec(kind=MeanKind.ABEL, epsilon=0.1).heat_parameter == 0.1


def test_dilate_with_profile():
    grid = symmetric_grid(3.0, 1.0 / 32)
    phi = make_signal(grid, _gaussian)
    narrow = dilate(phi, 0.5)
    assert np.abs(narrow.samples - 2.0 * _gaussian(2.0 * grid.points)).max() < 1e-15
    assert integrate(narrow).real == pytest.approx(1.0, abs=1e-10)
    with pytest.raises(InvalidParameterError):
        dilate(phi, -1.0)


def test_classical_convolution_of_gaussians(gaussian):
    g = make_signal(convolution_kernel_grid(gaussian), _gaussian)
    out = classical_convolve(gaussian, g)
    expected = np.exp(-math.pi * gaussian.t ** 2 / 2.0) / math.sqrt(2.0)
    assert np.abs(out.samples - expected).max() < 1e-10


def test_classical_convolution_grid_checks(gaussian):
    other_step = make_signal(symmetric_grid(6.0, 1.0 / 100), _gaussian)
    with pytest.raises(GridMismatchError):
        classical_convolve(gaussian, other_step)
    shifted = make_signal(UniformGrid(start=0.3 / 128, step=1.0 / 128, count=64), _gaussian)
    with pytest.raises(GridMismatchError):
        classical_convolve(gaussian, shifted)


def test_frac_convolve_conjugates_by_chirps(gaussian):
    alpha = 1.1
    cot = math.cos(alpha) / math.sin(alpha)
    f = make_signal(gaussian.grid, lambda t: _gaussian(t - 0.4) * np.exp(2j * math.pi * t))
    g = make_signal(convolution_kernel_grid(f), lambda t: _gaussian(2.0 * t) * 2.0)

    chirp = np.exp(1j * math.pi * cot * f.t ** 2)
    inner = classical_convolve(f.with_samples(f.samples * chirp), g)
    expected = inner.samples / chirp
    assert np.abs(frac_convolve(f, g, alpha).samples - expected).max() < 1e-12


def test_frac_convolve_special_orders_are_classical(gaussian):
    g = make_signal(convolution_kernel_grid(gaussian), _gaussian)
    for alpha in (0.0, math.pi):
        out = frac_convolve(gaussian, g, alpha)
        assert np.array_equal(out.samples, classical_convolve(gaussian, g).samples)


def _random_signal(seed, grid):
    rng = np.random.default_rng(seed)
    return Signal(grid=grid, samples=rng.standard_normal(grid.count) + 1j * rng.standard_normal(grid.count))


def test_delta_kernel_is_the_identity():
    f = _random_signal(3, symmetric_grid(2.0, 1.0 / 64))
    samples = f.samples.copy()
    samples[0] = samples[-1] = 0.0
    f = f.with_samples(samples)
    kernel_grid = convolution_kernel_grid(f)
    delta = np.zeros(kernel_grid.count)
    delta[kernel_grid.count // 2] = 1.0 / kernel_grid.step
    out = frac_convolve(f, Signal(grid=kernel_grid, samples=delta), 1.0)
    assert np.abs(out.samples - f.samples).max() < 1e-10


def test_delta_kernel_halves_nonzero_end_samples():
    f = _random_signal(5, symmetric_grid(1.0, 1.0 / 64))
    kernel_grid = convolution_kernel_grid(f)
    delta = np.zeros(kernel_grid.count)
    delta[kernel_grid.count // 2] = 1.0 / kernel_grid.step
    out = frac_convolve(f, Signal(grid=kernel_grid, samples=delta), 1.0)
    assert out.samples[0] == pytest.approx(f.samples[0] / 2.0)
    assert np.abs(out.samples[1:-1] - f.samples[1:-1]).max() < 1e-10


@pytest.mark.parametrize("alpha", [0.7, 2.4])
def test_frac_convolve_matches_double_sum(alpha):
    f = _random_signal(17, symmetric_grid(1.0, 1.0 / 64))
    g = _random_signal(19, convolution_kernel_grid(f))
    assert f.grid.count == 129

    cot = math.cos(alpha) / math.sin(alpha)
    chirp = np.exp(1j * math.pi * cot * f.t ** 2)
    weighted = trapezoid_weights(f.grid) * chirp * f.samples
    k = np.arange(f.grid.count)
    index = k[:, None] - k[None, :] + g.grid.count // 2
    expected = (g.samples[index] * weighted[None, :]).sum(axis=1) / chirp

    out = frac_convolve(f, g, alpha).samples
    assert np.linalg.norm(out - expected) / np.linalg.norm(expected) < 1e-12


@pytest.mark.parametrize("kind", [MeanKind.ABEL, MeanKind.GAUSS])
def test_two_paths_to_the_means_agree(gaussian, kind):
    spec = MeanSpec(kind=kind, epsilon=0.1)
    alpha = math.pi / 4
    assert relative_l2_error(mean_via_convolution(gaussian, spec, alpha), phi_mean(gaussian, spec, alpha)) < 1e-3


def test_custom_mean_reproduces_gauss(gaussian):
    alpha = math.pi / 4
    custom = MeanSpec(
        kind=MeanKind.CUSTOM,
        epsilon=0.1,
        phi=lambda y: np.exp(-4.0 * math.pi ** 2 * np.asarray(y) ** 2),
        kernel=lambda u: np.exp(-np.asarray(u) ** 2 / 4.0) / math.sqrt(4.0 * math.pi),
    )
    gauss = MeanSpec(kind=MeanKind.GAUSS, epsilon=0.1)
    assert relative_l2_error(mean_via_convolution(gaussian, custom, alpha),
                             mean_via_convolution(gaussian, gauss, alpha)) < 1e-4
    assert relative_l2_error(phi_mean(gaussian, custom, alpha), phi_mean(gaussian, gauss, alpha)) < 1e-6


def test_approximate_identity_error_shrinks(gaussian):
    phi = make_signal(symmetric_grid(6.0, 1.0 / 128), _gaussian)
    errors = [approx_identity_error(gaussian, phi, 1.0, eps, 2) for eps in (0.5, 0.1, 0.02)]
    assert errors[0] > errors[1] > errors[2]


def test_weierstrass_approximate_identity(gaussian):
    phi = weierstrass_kernel(1.0, symmetric_grid(12.0, 1.0 / 128))
    errors = [approx_identity_error(gaussian, phi, 1.0, eps, 2) for eps in (1.0, 0.1, 0.01)]
    assert errors[0] > errors[1] > errors[2]


def test_approximate_identity_l1_matches_pointwise_quadrature(gaussian):
    alpha, eps = 1.0, 0.1
    phi = weierstrass_kernel(1.0, symmetric_grid(12.0, 1.0 / 128))
    smoothed = frac_convolve(gaussian, dilate(phi, eps, convolution_kernel_grid(gaussian)), alpha)
    expected = trapezoid(np.abs(smoothed.samples - gaussian.samples), gaussian.t)
    assert approx_identity_error(gaussian, phi, alpha, eps, 1) == pytest.approx(expected, rel=1e-12)


def test_approximate_identity_of_zero_is_zero(grid):
    zero = Signal(grid=grid, samples=np.zeros(grid.count))
    phi = weierstrass_kernel(1.0, symmetric_grid(12.0, 1.0 / 128))
    assert [approx_identity_error(zero, phi, 1.0, eps, 2) for eps in (1.0, 0.1, 0.01)] == [0.0] * 3


def test_approximate_identity_warns_on_mass(gaussian):
    phi = make_signal(symmetric_grid(6.0, 1.0 / 128), lambda t: 2.0 * _gaussian(t))
    with pytest.warns(MassConditionWarning):
        approx_identity_error(gaussian, phi, 1.0, 0.1, 2)


def test_gauss_recovery_improves_along_schedule():
    alpha = math.pi / 4
    time_grid = staggered_grid(4.0, 1.0 / 64)
    transformed = make_signal(staggered_grid(8.0, 1.0 / 64), _gaussian)
    reference = make_signal(time_grid, _gaussian)
    rows = recover(transformed, alpha, MeanKind.GAUSS, config.DEFAULT_EPS_SCHEDULE, time_grid, reference)
    assert [r.eps for r in rows] == list(config.DEFAULT_EPS_SCHEDULE)
    assert [r.heat_parameter for r in rows] == pytest.approx([1.0, 0.01, 1e-4])
    errors = [r.l1_error for r in rows]
    assert errors[0] > errors[1] > errors[2]


def test_abel_mean_of_exponential_chirp_is_finite():
    alpha = math.pi / 3
    f = make_signal(UniformGrid(start=0.0, step=1.0 / 128, count=12 * 128 + 1), exp_chirp_pair(alpha).signal)
    means = [phi_mean(f, MeanSpec(kind=MeanKind.ABEL, epsilon=eps), alpha) for eps in (1.0, 0.1, 0.01)]
    assert all(np.isfinite(m.samples).all() for m in means)
    errors = [relative_l2_error(m, f) for m in means]
    assert errors[0] > errors[1] > errors[2]


@pytest.mark.parametrize("kind", [MeanKind.ABEL, MeanKind.GAUSS])
def test_heavy_damping_leaves_almost_nothing(gaussian, kind):
    out = phi_mean(gaussian, MeanSpec(kind=kind, epsilon=1e3), math.pi / 4)
    assert lp_norm(out, 2) < 1e-10 * lp_norm(gaussian, 2)


def test_zero_input_recovers_zero(grid):
    zero = Signal(grid=grid, samples=np.zeros(grid.count))
    rows = recover(zero, 1.0, MeanKind.ABEL, config.DEFAULT_EPS_SCHEDULE, grid, zero)
    assert [r.l1_error for r in rows] == [0.0, 0.0, 0.0]


def test_recovery_without_reference_has_no_errors(gaussian):
    rows = recover(gaussian, 1.0, "abel", (0.5, 0.1), gaussian.grid)
    assert all(r.l1_error is None for r in rows)
    assert rows[0].signal.grid.same_as(gaussian.grid)


def test_recovery_schedule_validation(gaussian):
    with pytest.raises(EmptyScheduleError):
        recover(gaussian, 1.0, MeanKind.ABEL, (), gaussian.grid)
    with pytest.raises(ValidationError):
        recover(gaussian, 1.0, MeanKind.ABEL, (0.1, 0.5), gaussian.grid)
