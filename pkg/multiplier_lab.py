"""
Fractional multipliers, the fractional Hilbert transform, multiplier
condition checkers and the fractional Littlewood-Paley decomposition.

A multiplier m acts by T_m f = F_{-α}[m · F_α f]. Unless a frequency grid is
given, operators work on a staggered grid (no sample at 0) with the input's
extent, so sgn-type symbols never meet their null set.
"""

import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd
from scipy.signal import fftconvolve

import config
from errors import (
    BoundaryDecayWarning,
    DegenerateSymbolError,
    EmptyIntervalError,
    InvalidExponentError,
    InvalidParameterError,
    SupBoundViolationError,
)
from frft_engine import angle_context, chirp_multiply, frft, require_generic
from models import (
    BernsteinReport,
    ConditionReport,
    DyadicIntervalAlpha,
    FrftMethod,
    MultiplierFn,
    Signal,
    SquareFunctionResult,
    UniformGrid,
)
from preconditions import check_boundary_decay, check_sup_bound
from signal_core import as_exponent, lp_norm, staggered_grid, trapezoid_weights

Interval = Union[DyadicIntervalAlpha, Tuple[float, float]]


def default_frequency_grid(f: Signal) -> UniformGrid:
    """Staggered grid with f's extent, FREQ_OVERSAMPLING times finer than f"""
    return staggered_grid(f.grid.half_width, f.grid.step / config.FREQ_OVERSAMPLING)


# ============================================================================
# MULTIPLIER OPERATORS
# ============================================================================

def _synthesize(transformed: Signal, symbol: np.ndarray, alpha: float, out: UniformGrid) -> Signal:
    """F_{-α}[symbol · F_α f] from already transformed samples"""
    shaped = transformed.with_samples(transformed.samples * symbol)
    return frft(shaped, -alpha, out, FrftMethod.FAST)


def apply_multiplier(
    m: MultiplierFn,
    alpha: float,
    f: Signal,
    freq_grid: Optional[UniformGrid] = None,
) -> Signal:
    """Forward transform, multiply by m on freq_grid, transform back onto f's grid"""
    require_generic(angle_context(alpha))
    freq_grid = freq_grid if freq_grid is not None else default_frequency_grid(f)
    ok, reason = check_sup_bound(m, freq_grid.points)
    if not ok:
        raise SupBoundViolationError(reason)
    transformed = frft(f, alpha, freq_grid, FrftMethod.FAST)
    return _synthesize(transformed, m(freq_grid.points), alpha, f.grid)


def constant_multiplier(value: complex = 1.0) -> MultiplierFn:
    return MultiplierFn(
        evaluator=lambda x: np.full(np.shape(x), value, dtype=complex),
        sup_bound=abs(value),
        derivative_evaluator=lambda x: np.zeros(np.shape(x), dtype=complex),
        name="const",
    )


def hilbert_symbol(alpha: float) -> MultiplierFn:
    """-i sgn((π - α) ω'), 0 at ω' = 0"""
    reduced = angle_context(alpha).alpha
    if abs(reduced - math.pi) < config.EXACT_ANGLE_TOL:
        raise DegenerateSymbolError("sgn((pi - alpha) w) vanishes identically at alpha = pi")
    orientation = 1.0 if reduced < math.pi else -1.0
    return MultiplierFn(
        evaluator=lambda x: -1j * np.sign(orientation * np.asarray(x, dtype=float)),
        sup_bound=1.0,
        derivative_evaluator=lambda x: np.zeros(np.shape(x), dtype=complex),
        name="hilbert",
    )


def interval_symbol(low: float, high: float) -> MultiplierFn:
    """χ_[low, high] with value 1/2 at the endpoints"""
    if not low < high:
        raise EmptyIntervalError(f"empty interval [{low}, {high}]")
    return MultiplierFn(
        evaluator=lambda x: 0.5 * (np.sign(np.asarray(x) - low) - np.sign(np.asarray(x) - high)),
        sup_bound=1.0,
        derivative_evaluator=lambda x: np.zeros(np.shape(x), dtype=complex),
        name="chi",
    )


def frac_hilbert_mult(f: Signal, alpha: float, freq_grid: Optional[UniformGrid] = None) -> Signal:
    """Fractional Hilbert transform through its multiplier"""
    return apply_multiplier(hilbert_symbol(alpha), alpha, f, freq_grid)


def classical_hilbert_pv(f: Signal) -> Signal:
    """
    (1/π) p.v. ∫ u(t) / (x - t) dt at every grid point. Odd-pairing rule:
    only samples an odd number of steps away contribute, with weight
    2 / (π (k - j)), so the singular sample is excluded symmetrically.
    """
    n = f.grid.count
    offsets = np.arange(-(n - 1), n)
    weights = np.zeros(offsets.shape[0])
    odd = offsets % 2 == 1
    weights[odd] = 2.0 / (math.pi * offsets[odd])
    full = fftconvolve(f.samples, weights)
    return f.with_samples(full[n - 1: 2 * n - 1])


def frac_hilbert_pv(f: Signal, alpha: float) -> Signal:
    """M_{-α} H M_α f with the principal-value rule above"""
    ctx = angle_context(alpha)
    require_generic(ctx)
    ok, reason = check_boundary_decay(f)
    if not ok:
        warnings.warn(reason, BoundaryDecayWarning, stacklevel=2)
    return chirp_multiply(classical_hilbert_pv(chirp_multiply(f, ctx, 1)), ctx, -1)


# ============================================================================
# CONDITION CHECKERS
# ============================================================================

def check_mikhlin(m: MultiplierFn, B: float, probe_grid: UniformGrid) -> ConditionReport:
    """max |x m'(x)| over nonzero probes against B"""
    x = probe_grid.points
    x = x[x != 0.0]
    value = float(np.abs(x * m.derivative(x)).max()) if x.size else 0.0
    return ConditionReport(
        checker="mikhlin",
        param=B,
        value=value,
        passed=value <= B * (1.0 + config.MIKHLIN_SLACK),
    )


def _annulus_energy(m: MultiplierFn, R: float) -> float:
    x = np.linspace(R, 2.0 * R, config.ANNULUS_POINTS)
    dx = x[1] - x[0]
    w = np.full(x.shape, dx)
    w[0] = w[-1] = dx / 2
    return float(np.dot(w, np.abs(m.derivative(x)) ** 2 + np.abs(m.derivative(-x)) ** 2))


def check_hormander(
    m: MultiplierFn,
    R_set: Sequence[float],
    B: Optional[float] = None,
    normalization: str = "scale_invariant",
) -> ConditionReport:
    """
    B_empirical = sqrt(max_R c(R) ∫_{R<|x|<2R} |m'|²) with c(R) = R
    (scale invariant) or 1/R (as printed).
    """
    if normalization not in ("scale_invariant", "printed"):
        raise InvalidParameterError(f"unknown normalization {normalization!r}")
    values = []
    for R in R_set:
        if not R > 0:
            raise InvalidParameterError(f"annulus radius must be positive, got {R}")
        factor = R if normalization == "scale_invariant" else 1.0 / R
        values.append(factor * _annulus_energy(m, R))
    b_empirical = math.sqrt(max(values)) if values else 0.0
    passed = math.isfinite(b_empirical) if B is None else b_empirical <= B * (1.0 + 1e-2)
    return ConditionReport(
        checker="hormander",
        param=float("nan") if B is None else B,
        value=b_empirical,
        passed=passed,
    )


def hormander_profile(m: MultiplierFn, R_set: Sequence[float]) -> List[float]:
    """Scale-invariant annulus quantity per R, in R_set order"""
    return [R * _annulus_energy(m, R) for R in R_set]


def dyadic_variation(m: MultiplierFn, j: int, sign: int) -> float:
    """∫ |m'| over sign·[2^j, 2^(j+1)]"""
    x = sign * np.linspace(2.0 ** j, 2.0 ** (j + 1), config.DYADIC_POINTS)
    dx = abs(x[1] - x[0])
    w = np.full(x.shape, dx)
    w[0] = w[-1] = dx / 2
    return float(np.dot(w, np.abs(m.derivative(x))))


def check_marcinkiewicz(
    m: MultiplierFn,
    j_range: Iterable[int],
    B: Optional[float] = None,
) -> ConditionReport:
    """Largest total variation of m over the binary intervals, both signs"""
    variations = [dyadic_variation(m, j, s) for j in j_range for s in (1, -1)]
    value = max(variations) if variations else 0.0
    passed = math.isfinite(value) if B is None else value <= B * (1.0 + config.MIKHLIN_SLACK)
    return ConditionReport(
        checker="marcinkiewicz",
        param=float("nan") if B is None else B,
        value=value,
        passed=passed,
    )


def bernstein_norms(m: MultiplierFn, grid: UniformGrid) -> BernsteinReport:
    """||m||_2, ||m'||_2 on the probe grid and their product"""
    x = grid.points
    w = trapezoid_weights(grid)
    l2_m = math.sqrt(float(np.dot(w, np.abs(m(x)) ** 2)))
    l2_mprime = math.sqrt(float(np.dot(w, np.abs(m.derivative(x)) ** 2)))
    return BernsteinReport(l2_m=l2_m, l2_mprime=l2_mprime, bound=l2_m * l2_mprime)


def condition_table(reports: Iterable[ConditionReport]) -> pd.DataFrame:
    return pd.DataFrame([r.to_row() for r in reports], columns=["checker", "param", "value", "pass"])


# ============================================================================
# PARTIAL SUMS & LITTLEWOOD-PALEY
# ============================================================================

def dyadic_interval(j: int, sign: int, alpha: float) -> DyadicIntervalAlpha:
    return DyadicIntervalAlpha(j=j, sign=sign, alpha=alpha)


def _endpoints(interval: Interval) -> Tuple[float, float]:
    if isinstance(interval, DyadicIntervalAlpha):
        return interval.endpoints
    low, high = interval
    return float(low), float(high)


def partial_sum_mult(
    f: Signal,
    interval: Interval,
    alpha: float,
    freq_grid: Optional[UniformGrid] = None,
) -> Signal:
    """F_α(S f) = χ_[a_α, b_α] F_α f"""
    low, high = _endpoints(interval)
    return apply_multiplier(interval_symbol(low, high), alpha, f, freq_grid)


def partial_sum_hilbert(
    f: Signal,
    a: float,
    b: float,
    alpha: float,
    freq_grid: Optional[UniformGrid] = None,
) -> Signal:
    """
    (i/2)[e^{2πia·} H_α(e^{-2πia·} f) - e^{2πib·} H_α(e^{-2πib·} f)], the
    projection onto frequencies between a sin α and b sin α.
    """
    if a > b:
        raise EmptyIntervalError(f"empty interval [{a}, {b}]")
    if a == b:
        return f.with_samples(np.zeros(f.grid.count, dtype=complex))
    t = f.t

    def modulated_hilbert(c: float) -> np.ndarray:
        carrier = np.exp(2j * math.pi * c * t)
        shifted = f.with_samples(f.samples / carrier)
        return carrier * frac_hilbert_mult(shifted, alpha, freq_grid).samples

    return f.with_samples(0.5j * (modulated_hilbert(a) - modulated_hilbert(b)))


def lp_square_function(
    f: Signal,
    alpha: float,
    j_min: int,
    j_max: int,
    p,
    freq_grid: Optional[UniformGrid] = None,
) -> SquareFunctionResult:
    """(Σ_ρ |S_ρ f|²)^(1/2) over the 2(j_max - j_min + 1) binary blocks"""
    exponent = as_exponent(p)
    if not 1.0 < exponent.p < math.inf:
        raise InvalidExponentError(exponent.p, "(1, inf)")
    if j_min > j_max:
        raise InvalidParameterError(f"j_min={j_min} exceeds j_max={j_max}")
    require_generic(angle_context(alpha))
    freq_grid = freq_grid if freq_grid is not None else default_frequency_grid(f)
    transformed = frft(f, alpha, freq_grid, FrftMethod.FAST)
    x = freq_grid.points
    blocks = [dyadic_interval(j, s, alpha) for j in range(j_min, j_max + 1) for s in (1, -1)]

    def block(interval: DyadicIntervalAlpha) -> np.ndarray:
        low, high = interval.endpoints
        return np.abs(_synthesize(transformed, interval_symbol(low, high)(x), alpha, f.grid).samples) ** 2

    with ThreadPoolExecutor() as pool:
        energies = list(pool.map(block, blocks))
    total = np.zeros(f.grid.count)
    for e in energies:
        total += e
    square_fn = f.with_samples(np.sqrt(total))
    norm = lp_norm(square_fn, exponent)
    reference = lp_norm(f, exponent)
    return SquareFunctionResult(
        square_fn=square_fn,
        norm=norm,
        ratio=norm / reference if reference > 0 else 0.0,
        blocks=len(blocks),
    )
