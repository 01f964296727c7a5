"""
Preconditions - numeric guardrails checked before a transform runs
"""

from typing import Optional, Tuple

import numpy as np

import config
from models import AngleContext, MultiplierFn, Signal, UniformGrid


def resolution_bound(
    grid: UniformGrid,
    ctx: AngleContext,
    out: UniformGrid,
    bandwidth: Optional[float] = None,
) -> float:
    """
    step * (B_f + T|cot α| + X|csc α|) for input grid half-width T and
    output half-width X. B_f defaults to BANDWIDTH_FRACTION / step.
    """
    if bandwidth is None:
        bandwidth = config.BANDWIDTH_FRACTION / grid.step
    return grid.step * (
        bandwidth + grid.half_width * abs(ctx.cot_a) + out.half_width * abs(ctx.csc_a)
    )


def validate_resolution(
    grid: UniformGrid,
    ctx: AngleContext,
    out: UniformGrid,
    bandwidth: Optional[float] = None,
) -> Tuple[bool, str]:
    """
    Oscillation check for the kernel quadrature

    Returns:
        (is_resolved: bool, reason: str)
    """
    bound = resolution_bound(grid, ctx, out, bandwidth)
    if not bound < config.RESOLUTION_LIMIT:
        return False, f"Resolution bound {bound:.4g} not below {config.RESOLUTION_LIMIT}"
    return True, "PASSED"


def check_boundary_decay(f: Signal) -> Tuple[bool, str]:
    """End samples must be small relative to the peak"""
    peak = float(np.abs(f.samples).max())
    if peak == 0.0:
        return True, "PASSED"
    edge = float(max(abs(f.samples[0]), abs(f.samples[-1])))
    if edge > config.BOUNDARY_DECAY_RATIO * peak:
        return False, f"Boundary magnitude {edge:.3g} exceeds {config.BOUNDARY_DECAY_RATIO:g} of peak {peak:.3g}"
    return True, "PASSED"


def check_kernel_mass(mass: complex) -> Tuple[bool, str]:
    """Approximate-identity kernels must integrate to 1"""
    if abs(mass - 1.0) > config.MASS_TOLERANCE:
        return False, f"Kernel mass {mass:.6g} differs from 1 by more than {config.MASS_TOLERANCE:g}"
    return True, "PASSED"


def check_sup_bound(m: MultiplierFn, probes: np.ndarray) -> Tuple[bool, str]:
    """Declared sup bound must hold at every probe"""
    values = np.abs(m(probes))
    limit = m.sup_bound * (1.0 + config.SUP_BOUND_SLACK)
    if values.size and values.max() > limit:
        worst = int(values.argmax())
        return False, f"|{m.name}({probes[worst]:.6g})| = {values[worst]:.6g} exceeds sup bound {m.sup_bound:g}"
    return True, "PASSED"
