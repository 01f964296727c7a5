"""
Signal core: sampling, trapezoid quadrature, norms, pairings and grid helpers.

Every other module computes on these. All quadrature is composite trapezoid
with the signal taken as zero outside its grid.
"""

import math
from typing import Callable, Optional, Union

import numpy as np
from scipy.interpolate import CubicSpline

from errors import GridMismatchError, InvalidExponentError, NonFiniteSampleError
from models import LpExponent, Signal, UniformGrid

ExponentLike = Union[float, int, LpExponent]


def _evaluate(f: Callable, t: np.ndarray) -> np.ndarray:
    """Call f on the whole abscissa array, falling back to a scalar loop"""
    try:
        values = np.asarray(f(t), dtype=complex)
    except (TypeError, ValueError):
        values = None
    if values is None or values.shape not in (t.shape, ()):
        values = np.array([complex(f(float(x))) for x in t], dtype=complex)
    return np.broadcast_to(values, t.shape).copy()


def make_signal(grid: UniformGrid, f: Callable) -> Signal:
    """Sample f at every grid point; rejects the first non-finite sample"""
    values = _evaluate(f, grid.points)
    bad = np.flatnonzero(~np.isfinite(values))
    if bad.size:
        raise NonFiniteSampleError(int(bad[0]), values[bad[0]])
    return Signal(grid=grid, samples=values, profile=f)


def trapezoid_weights(grid: UniformGrid) -> np.ndarray:
    """Composite trapezoid weights; a single-point grid gets one full step"""
    w = np.full(grid.count, grid.step)
    if grid.count > 1:
        w[0] = w[-1] = grid.step / 2.0
    return w


def integrate(f: Signal) -> complex:
    return complex(np.dot(trapezoid_weights(f.grid), f.samples))


def as_exponent(p: ExponentLike) -> LpExponent:
    if isinstance(p, LpExponent):
        return p
    p = float(p)
    if math.isnan(p) or p < 1.0:
        raise InvalidExponentError(p)
    return LpExponent(p=p)


def lp_norm(f: Signal, p: ExponentLike) -> float:
    """(Σ w_i |f_i|^p)^(1/p); p = inf gives the max modulus"""
    exponent = as_exponent(p).p
    magnitude = np.abs(f.samples)
    if math.isinf(exponent):
        return float(magnitude.max()) if magnitude.size else 0.0
    total = float(np.dot(trapezoid_weights(f.grid), magnitude ** exponent))
    return total ** (1.0 / exponent)


def require_same_grid(f: Signal, g: Signal) -> None:
    if not f.grid.same_as(g.grid):
        raise GridMismatchError(f"grids differ: {f.grid.spec()} vs {g.grid.spec()}")


def inner_product(f: Signal, g: Signal) -> complex:
    """∫ f g with no conjugation, as in the multiplication formula"""
    require_same_grid(f, g)
    return complex(np.dot(trapezoid_weights(f.grid), f.samples * g.samples))


def relative_l2_error(approx: Signal, reference: Signal) -> float:
    """||approx - reference||_2 / ||reference||_2 on a shared grid"""
    require_same_grid(approx, reference)
    diff = approx.with_samples(approx.samples - reference.samples)
    scale = lp_norm(reference, 2)
    return lp_norm(diff, 2) / scale if scale > 0 else lp_norm(diff, 2)


def boundary_magnitude(f: Signal) -> float:
    """Largest modulus among the two end samples"""
    return float(max(abs(f.samples[0]), abs(f.samples[-1])))


# ============================================================================
# GRID HELPERS
# ============================================================================

def symmetric_grid(half_width: float, step: float) -> UniformGrid:
    """Grid -n*step .. n*step with a sample at 0"""
    n = max(1, int(math.ceil(half_width / step - 1e-9)))
    return UniformGrid(start=-n * step, step=step, count=2 * n + 1)


def staggered_grid(half_width: float, step: float) -> UniformGrid:
    """Symmetric grid at odd multiples of step/2; no sample at 0"""
    n = max(1, int(math.ceil(half_width / step - 1e-9)))
    return UniformGrid(start=-(n - 0.5) * step, step=step, count=2 * n)


def default_output_grid(f: Signal) -> UniformGrid:
    """Symmetric grid with the input's extent and step"""
    return symmetric_grid(f.grid.half_width, f.grid.step)


# ============================================================================
# RESAMPLING
# ============================================================================

def resample(f: Signal, grid: UniformGrid) -> Signal:
    """
    f on another grid. Exact when the grids coincide or a profile is known;
    cubic spline otherwise, zero outside f's support.
    """
    if f.grid.same_as(grid):
        return Signal(grid=grid, samples=f.samples, profile=f.profile)
    x = grid.points
    if f.profile is not None:
        return make_signal(grid, f.profile)
    if f.grid.count < 2:
        values = np.where(np.isclose(x, f.grid.start), f.samples[0], 0.0)
        return Signal(grid=grid, samples=values)
    inside = (x >= f.grid.start) & (x <= f.grid.end)
    re = CubicSpline(f.t, f.samples.real)(x)
    im = CubicSpline(f.t, f.samples.imag)(x)
    return Signal(grid=grid, samples=np.where(inside, re + 1j * im, 0.0))


def reflect(f: Signal) -> Signal:
    """f(-x): negated grid, reversed samples"""
    grid = UniformGrid(start=-f.grid.end, step=f.grid.step, count=f.grid.count)
    profile: Optional[Callable] = None
    if f.profile is not None:
        source = f.profile
        profile = lambda x: source(-np.asarray(x))
    return Signal(grid=grid, samples=f.samples[::-1], profile=profile)
