"""
Fractional convolution, summability kernels and damped inversion.

    f ⋆_α g = M_{-α}(M_α f * g)

Abel and Gauss means of the inversion integral are computed two ways: by
damping the transform directly (phi_mean) and by fractional convolution with
the Poisson or Weierstrass kernel (mean_via_convolution). The Gauss mean at ε
pairs with the Weierstrass kernel at heat parameter ε².
"""

import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence, Union

import numpy as np
from scipy.interpolate import CubicSpline
from scipy.signal import fftconvolve
from scipy.special import erf

import config
from errors import EmptyScheduleError, GridMismatchError, InvalidParameterError, MassConditionWarning
from frft_engine import angle_context, chirp_multiply, frft, require_generic
from models import (
    AngleClass,
    EpsilonSchedule,
    FrftMethod,
    MeanKind,
    MeanSpec,
    RecoveryRow,
    Signal,
    UniformGrid,
)
from preconditions import check_kernel_mass
from signal_core import (
    as_exponent,
    integrate,
    lp_norm,
    make_signal,
    resample,
    staggered_grid,
    symmetric_grid,
    trapezoid_weights,
)


def _require_positive(eps: float) -> None:
    if not eps > 0:
        raise InvalidParameterError(f"eps must be positive, got {eps}")


# ============================================================================
# DILATION & KERNELS
# ============================================================================

def dilate(phi: Signal, eps: float, grid: Optional[UniformGrid] = None) -> Signal:
    """φ_ε(x) = φ(x/ε)/ε on `grid` (default: φ's own grid)"""
    _require_positive(eps)
    grid = grid if grid is not None else phi.grid
    if phi.profile is not None:
        source = phi.profile
        return make_signal(grid, lambda x: np.asarray(source(np.asarray(x) / eps)) / eps)

    x = grid.points / eps
    inside = (x >= phi.grid.start) & (x <= phi.grid.end)
    re = CubicSpline(phi.t, phi.samples.real)(x)
    im = CubicSpline(phi.t, phi.samples.imag)(x)
    return Signal(grid=grid, samples=np.where(inside, (re + 1j * im) / eps, 0.0))


def poisson_kernel(eps: float, grid: UniformGrid) -> Signal:
    """P_ε(x) = (1/π) ε / (ε² + x²)"""
    _require_positive(eps)
    return make_signal(grid, lambda x: (eps / math.pi) / (eps * eps + np.asarray(x) ** 2))


def poisson_truncation_mass(eps: float, grid: UniformGrid) -> float:
    """Mass of P_ε outside the grid's closed interval"""
    _require_positive(eps)
    inside = (math.atan(grid.end / eps) - math.atan(grid.start / eps)) / math.pi
    return 1.0 - inside


def weierstrass_kernel(eps: float, grid: UniformGrid) -> Signal:
    """W_ε(x) = (4πε)^(-1/2) exp(-x² / 4ε)"""
    _require_positive(eps)
    scale = 1.0 / math.sqrt(4.0 * math.pi * eps)
    return make_signal(grid, lambda x: scale * np.exp(-np.asarray(x) ** 2 / (4.0 * eps)))


def sampled_kernel(spec: MeanSpec, grid: UniformGrid) -> Signal:
    """
    Kernel whose fractional convolution gives the mean described by `spec`.
    Abel and Gauss kernels are cell averages, so the discrete mass stays 1
    even when the kernel is narrower than a grid step. Custom kernels are
    point samples of the reflected dilation.
    """
    x = grid.points
    h = grid.step
    if spec.kind == MeanKind.ABEL:
        eps = spec.epsilon
        values = (np.arctan((x + h / 2) / eps) - np.arctan((x - h / 2) / eps)) / (math.pi * h)
    elif spec.kind == MeanKind.GAUSS:
        root = 2.0 * math.sqrt(spec.heat_parameter)
        values = (erf((x + h / 2) / root) - erf((x - h / 2) / root)) / (2.0 * h)
    else:
        if spec.kernel is None:
            raise InvalidParameterError("custom means need a kernel for the convolution path")
        eps = spec.epsilon
        values = np.asarray(spec.kernel(-x / eps), dtype=complex) / eps
    return Signal(grid=grid, samples=values)


# ============================================================================
# CONVOLUTION
# ============================================================================

def classical_convolve(f: Signal, g: Signal) -> Signal:
    """
    (f * g)(x_k) = Σ_j w_j f_j g(x_k - t_j) on f's grid. g's grid must share
    f's step and start at an integer multiple of it.
    """
    step = f.grid.step
    if abs(g.grid.step - step) > 1e-12 * step:
        raise GridMismatchError(f"step mismatch: {f.grid.step!r} vs {g.grid.step!r}")
    offset = g.grid.start / step
    shift = int(round(offset))
    if abs(offset - shift) > 1e-9:
        raise GridMismatchError("kernel grid is not aligned to a multiple of the step")

    full = fftconvolve(trapezoid_weights(f.grid) * f.samples, g.samples)
    m = np.arange(f.grid.count) - shift
    valid = (m >= 0) & (m < full.shape[0])
    out = np.zeros(f.grid.count, dtype=complex)
    out[valid] = full[m[valid]]
    return f.with_samples(out)


def frac_convolve(f: Signal, g: Signal, alpha: float) -> Signal:
    """M_{-α}(M_α f * g); ordinary convolution for the exactly special orders"""
    ctx = angle_context(alpha)
    if ctx.angle_class in (AngleClass.IDENTITY, AngleClass.REFLECTION):
        return classical_convolve(f, g)
    require_generic(ctx)
    return chirp_multiply(classical_convolve(chirp_multiply(f, ctx, 1), g), ctx, -1)


def convolution_kernel_grid(f: Signal) -> UniformGrid:
    """Kernel grid with f's step covering every difference x - t on f's grid"""
    return symmetric_grid(2.0 * f.grid.half_width, f.grid.step)


def approx_identity_error(f: Signal, phi: Signal, alpha: float, eps: float, p) -> float:
    """||f ⋆_α φ_ε - f||_p; warns when φ does not have unit mass"""
    _require_positive(eps)
    exponent = as_exponent(p)
    ok, reason = check_kernel_mass(integrate(phi))
    if not ok:
        warnings.warn(reason, MassConditionWarning, stacklevel=2)
    kernel = dilate(phi, eps, convolution_kernel_grid(f))
    smoothed = frac_convolve(f, kernel, alpha)
    return lp_norm(f.with_samples(smoothed.samples - f.samples), exponent)


# ============================================================================
# MEANS
# ============================================================================

def _internal_frequency_grid(f: Signal, spec: MeanSpec, ctx, out: UniformGrid) -> UniformGrid:
    """
    Staggered frequency grid: wide enough for the damping to fall below
    DAMPING_FLOOR, capped at the band the input grid resolves, with a step
    that resolves the inverse onto `out`.
    """
    cot, csc = abs(ctx.cot_a), abs(ctx.csc_a)
    budget = 0.95 * (config.RESOLUTION_LIMIT - config.BANDWIDTH_FRACTION)
    resolved = (budget - f.grid.step * f.grid.half_width * cot) / (f.grid.step * csc)
    log_floor = math.log(1.0 / config.DAMPING_FLOOR)
    if spec.kind == MeanKind.ABEL:
        damped = log_floor / (2.0 * math.pi * spec.epsilon * csc)
    elif spec.kind == MeanKind.GAUSS:
        damped = math.sqrt(log_floor) / (2.0 * math.pi * spec.epsilon * csc)
    else:
        damped = resolved
    half_width = max(min(damped, resolved), f.grid.step)
    step = budget / (half_width * cot + out.half_width * csc)
    return staggered_grid(half_width, min(step, half_width))


def phi_mean(f: Signal, spec: MeanSpec, alpha: float, out: Optional[UniformGrid] = None) -> Signal:
    """∫ (F_α f)(x) K_{-α}(x, t) Φ(ε x csc α) dx by trapezoid quadrature"""
    ctx = angle_context(alpha)
    require_generic(ctx)
    out = out if out is not None else f.grid
    freq = _internal_frequency_grid(f, spec, ctx, out)
    transformed = frft(f, alpha, freq, FrftMethod.FAST)
    damped = transformed.with_samples(transformed.samples * spec.damping(freq.points, ctx.csc_a))
    return frft(damped, -alpha, out, FrftMethod.FAST)


def mean_via_convolution(f: Signal, spec: MeanSpec, alpha: float) -> Signal:
    """f ⋆_α φ̃_ε with the Poisson (Abel), Weierstrass at ε² (Gauss) or custom kernel"""
    kernel = sampled_kernel(spec, convolution_kernel_grid(f))
    return frac_convolve(f, kernel, alpha)


def recover(
    f_transformed: Signal,
    alpha: float,
    kind: Union[MeanKind, str],
    schedule: Union[EpsilonSchedule, Sequence[float]],
    out: UniformGrid,
    reference: Optional[Signal] = None,
    phi=None,
) -> List[RecoveryRow]:
    """
    Damped inversion of sampled F_α f at every ε of the schedule, one row per
    ε in schedule order. With a reference, each row carries its L¹ error.
    """
    values = schedule.values if isinstance(schedule, EpsilonSchedule) else tuple(schedule)
    if not values:
        raise EmptyScheduleError("recovery needs at least one epsilon")
    values = EpsilonSchedule(values=values).values
    ctx = angle_context(alpha)
    require_generic(ctx)
    kind = MeanKind(kind)
    target = resample(reference, out) if reference is not None else None
    x = f_transformed.t

    def one(eps: float) -> RecoveryRow:
        spec = MeanSpec(kind=kind, epsilon=eps, phi=phi)
        damped = f_transformed.with_samples(f_transformed.samples * spec.damping(x, ctx.csc_a))
        recovered = frft(damped, -alpha, out, FrftMethod.FAST)
        error = None
        if target is not None:
            error = lp_norm(recovered.with_samples(recovered.samples - target.samples), 1)
        return RecoveryRow(eps=eps, heat_parameter=spec.heat_parameter, signal=recovered, l1_error=error)

    with ThreadPoolExecutor() as pool:
        return list(pool.map(one, values))
