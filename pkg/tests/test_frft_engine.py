import math

import numpy as np
import pytest

import config
from errors import AliasingRiskError, InvalidExponentError, KernelUndefinedError, NearSingularOrderError
from frft_engine import (
    angle_context,
    chirp_multiply,
    frft,
    group_law_defect,
    hausdorff_young_check,
    hausdorff_young_sweep,
    inverse_frft,
    kernel_value,
    modulus_of_continuity,
    multiplication_defect,
    tail_maximum,
    unitarity_defect,
)
from models import AngleClass, FrftMethod, UniformGrid
from reference_signals import exp_chirp_pair
from signal_core import make_signal, relative_l2_error, symmetric_grid

GENERIC_ORDERS = [0.3, math.pi / 4, 1.0, math.pi / 2, 2.0, 5.0]


@pytest.mark.parametrize("alpha, expected", [
    (0.0, AngleClass.IDENTITY),
    (2 * math.pi, AngleClass.IDENTITY),
    (-2 * math.pi, AngleClass.IDENTITY),
    (math.pi, AngleClass.REFLECTION),
    (3 * math.pi, AngleClass.REFLECTION),
    (math.pi + 5e-4, AngleClass.NEAR_SINGULAR),
    (2e-4, AngleClass.NEAR_SINGULAR),
    (1.0, AngleClass.GENERIC),
    (math.pi + 2e-3, AngleClass.GENERIC),
])
def test_angle_classes(alpha, expected):
    assert angle_context(alpha).angle_class == expected


def test_orders_reduce_into_one_turn():
    ctx = angle_context(-1.0)
    assert ctx.alpha == pytest.approx(2 * math.pi - 1.0)
    assert 0.0 <= angle_context(7 * math.pi + 0.5).alpha < 2 * math.pi


@pytest.mark.parametrize("alpha", GENERIC_ORDERS)
def test_amplitude_is_principal_root(alpha):
    ctx = angle_context(alpha)
    assert ctx.a_alpha.real > 0
    assert ctx.a_alpha ** 2 == pytest.approx(complex(1.0, -ctx.cot_a))


def test_kernel_symmetric_and_refused_off_generic():
    ctx = angle_context(1.2)
    assert kernel_value(ctx, 0.7, -1.3) == kernel_value(ctx, -1.3, 0.7)
    with pytest.raises(KernelUndefinedError):
        kernel_value(angle_context(0.0), 0.1, 0.2)
    with pytest.raises(NearSingularOrderError):
        kernel_value(angle_context(math.pi - 1e-4), 0.1, 0.2)


def test_chirp_multiply_is_unimodular(gaussian):
    ctx = angle_context(1.0)
    up = chirp_multiply(gaussian, ctx, 1)
    assert np.allclose(np.abs(up.samples), np.abs(gaussian.samples))
    back = chirp_multiply(up, ctx, -1)
    assert np.abs(back.samples - gaussian.samples).max() < 1e-15


def test_identity_and_reflection(wave_packet):
    same = frft(wave_packet, 2 * math.pi)
    assert np.array_equal(same.samples, wave_packet.samples)
    flipped = frft(wave_packet, math.pi)
    expected = np.exp(-math.pi * (-wave_packet.t - 0.5) ** 2) * np.exp(-1j * math.pi * wave_packet.t)
    assert np.abs(flipped.samples - expected).max() < 1e-12


def test_near_singular_order_is_refused(gaussian):
    with pytest.raises(NearSingularOrderError) as exc:
        frft(gaussian, 2 * math.pi + 1e-4)
    assert exc.value.exit_code == config.EXIT_PRECONDITION


@pytest.mark.parametrize("alpha", GENERIC_ORDERS)
@pytest.mark.parametrize("method", [FrftMethod.FAST, FrftMethod.DIRECT])
def test_gaussian_is_an_eigenfunction(fine_gaussian, alpha, method):
    out = frft(fine_gaussian, alpha, method=method)
    assert np.abs(out.samples - fine_gaussian.samples).max() < 1e-8


@pytest.mark.parametrize("alpha", [1.0, 2.0, 4.0])
def test_fast_matches_direct(wave_packet, alpha):
    out = UniformGrid(start=-3.3, step=0.013, count=400)
    fast = frft(wave_packet, alpha, out, FrftMethod.FAST)
    direct = frft(wave_packet, alpha, out, FrftMethod.DIRECT)
    assert relative_l2_error(fast, direct) < 1e-9


def test_fractional_half_turn_of_gaussian_is_fourier(gaussian):
    f = make_signal(gaussian.grid, lambda t: np.exp(-math.pi * (t - 1.0) ** 2))
    out = frft(f, math.pi / 2)
    expected = np.exp(-math.pi * out.t ** 2) * np.exp(-2j * math.pi * out.t)
    assert np.abs(out.samples - expected).max() < 1e-8


def test_aliasing_risk_is_refused(gaussian):
    with pytest.raises(AliasingRiskError) as exc:
        frft(gaussian, 1.0, symmetric_grid(200.0, 1.0))
    assert exc.value.exit_code == config.EXIT_PRECONDITION
    assert exc.value.bound >= config.RESOLUTION_LIMIT


def test_inverse_round_trip(wave_packet):
    back = inverse_frft(frft(wave_packet, 0.9), 0.9)
    assert relative_l2_error(back, wave_packet) < 1e-8


def test_group_law(wave_packet):
    assert group_law_defect(wave_packet, 0.7, 1.1) < 1e-6
    assert group_law_defect(wave_packet, 2.5, 2.0) < 1e-6


@pytest.mark.parametrize("alpha", GENERIC_ORDERS)
def test_unitarity(wave_packet, alpha):
    assert unitarity_defect(wave_packet, alpha) < 1e-6


def test_multiplication_formula(grid):
    f = make_signal(grid, lambda t: np.exp(-math.pi * t ** 2) * np.exp(1j * math.pi * t))
    g = make_signal(grid, lambda t: np.exp(-2 * math.pi * (t - 0.5) ** 2))
    assert multiplication_defect(f, g, 1.0) < 1e-8


@pytest.mark.parametrize("p", [1.0, 4.0 / 3.0, 1.5, 2.0])
def test_hausdorff_young(wave_packet, p):
    report = hausdorff_young_check(wave_packet, 1.0, p)
    assert report.satisfied
    assert report.lhs <= report.rhs * (1 + config.HAUSDORFF_YOUNG_SLACK)


def test_hausdorff_young_rejects_large_exponents(wave_packet):
    with pytest.raises(InvalidExponentError):
        hausdorff_young_check(wave_packet, 1.0, 3.0)


def test_hausdorff_young_sweep_keeps_order(corpus):
    reports = hausdorff_young_sweep(corpus, 1.0, 1.5)
    assert len(reports) == len(corpus)
    assert all(r.satisfied for r in reports)


def test_transform_tails_shrink():
    alpha = math.pi / 3
    pair = exp_chirp_pair(alpha)
    f = make_signal(UniformGrid(start=0.0, step=1.0 / 128, count=12 * 128 + 1), pair.signal)
    transformed = frft(f, alpha, symmetric_grid(10.0, 1.0 / 64))
    tails = [tail_maximum(transformed, x) for x in (2.0, 4.0, 8.0)]
    assert all(b <= a + 1e-9 for a, b in zip(tails, tails[1:]))
    assert tail_maximum(transformed, 100.0) == 0.0


def test_modulus_of_continuity_shrinks_with_shift(wave_packet):
    transformed = frft(wave_packet, 1.0)
    moduli = [modulus_of_continuity(transformed, s) for s in (16, 4, 1)]
    assert moduli[0] > moduli[1] > moduli[2] > 0.0
    assert modulus_of_continuity(transformed, 0) == 0.0
