"""
Acceptance suites behind `frft-lab check`.

Each suite returns (passed, detail) and uses the same operations and
tolerances as the test suite. Suites are independent and run concurrently;
results come back sorted by suite name.
"""

import math
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, Iterable, List, Optional, Tuple

import numpy as np
import pandas as pd
from scipy.integrate import quad

import config
from convolve_means import mean_via_convolution, phi_mean, recover
from corpus import generate_corpus, narrow_band_signal
from errors import InvalidParameterError
from frft_engine import (
    frft,
    group_law_defect,
    hausdorff_young_sweep,
    multiplication_defect,
    unitarity_defect,
)
from models import ConditionReport, FrftMethod, MeanKind, MeanSpec, MultiplierFn, SuiteResult, UniformGrid
from multiplier_lab import (
    check_hormander,
    check_marcinkiewicz,
    check_mikhlin,
    default_frequency_grid,
    frac_hilbert_mult,
    frac_hilbert_pv,
    hilbert_symbol,
    lp_square_function,
    partial_sum_hilbert,
    partial_sum_mult,
)
from reference_signals import (
    adjudicate_chirp_u,
    chirp_u,
    chirp_u_frft_derived,
    chirp_u_l1_mass,
    exp_chirp_pair,
    fresnel_c,
    sine_integral,
    staircase_frft_closed_form,
    staircase_l1_mass,
    staircase_signal,
)
from signal_core import integrate, lp_norm, make_signal, relative_l2_error, resample, staggered_grid, symmetric_grid

SuiteFn = Callable[[], Tuple[bool, str]]


def _gaussian(t):
    return np.exp(-math.pi * np.asarray(t, dtype=float) ** 2)


def narrow_band_setup(alpha: float, centers=(2.12, -2.12, 4.24)):
    """Narrow-band test signal whose F_α content sits inside fractional binary blocks 1 and 2"""
    time_grid = symmetric_grid(config.NARROW_BAND_TIME_HALF_WIDTH, config.NARROW_BAND_TIME_STEP)
    freq_grid = symmetric_grid(config.NARROW_BAND_FREQ_HALF_WIDTH, config.NARROW_BAND_TIME_STEP)
    return narrow_band_signal(alpha, centers, config.NARROW_BAND_WIDTH, time_grid, freq_grid)


def aligned_endpoint(value: float, alpha: float, step: float) -> float:
    """a with a·sin α on the frequency lattice of the given step"""
    s = math.sin(alpha)
    return round(value * s / step) * step / s


# ============================================================================
# FRFT ENGINE
# ============================================================================

def suite_fast_vs_direct() -> Tuple[bool, str]:
    worst = 0.0
    for alpha in (1.0, 2.0):
        for f in generate_corpus():
            fast = frft(f, alpha, method=FrftMethod.FAST)
            direct = frft(f, alpha, method=FrftMethod.DIRECT)
            worst = max(worst, relative_l2_error(fast, direct))
    return worst < 1e-6, f"max relative L2 {worst:.2e}"


def _generic_pairs(rng: np.random.Generator, count: int, margin: float = 0.35):
    pairs = []
    while len(pairs) < count:
        a, b = rng.uniform(margin, 2 * math.pi - margin, size=2)
        if all(min(v % math.pi, math.pi - v % math.pi) >= margin for v in (a, b, a + b)):
            pairs.append((float(a), float(b)))
    return pairs


def suite_group_law() -> Tuple[bool, str]:
    grid = symmetric_grid(6.0, 1.0 / 256)
    f = make_signal(grid, _gaussian)
    rng = np.random.default_rng(config.RANDOM_SEED)
    worst = max(group_law_defect(f, a, b) for a, b in _generic_pairs(rng, 5))
    return worst < 1e-2, f"max relative L2 {worst:.2e} over 5 pairs"


def suite_unitarity() -> Tuple[bool, str]:
    grid = symmetric_grid(config.CORPUS_HALF_WIDTH, 1.0 / 256)
    signals = [resample(f, grid) for f in generate_corpus()]
    worst = 0.0
    for alpha in (0.3, math.pi / 4, 1.0, 2.0, 5.0):
        worst = max(worst, max(unitarity_defect(f, alpha) for f in signals))
    return worst < 1e-3, f"max defect {worst:.2e}"


def suite_multiplication() -> Tuple[bool, str]:
    grid = symmetric_grid(4.0, 1.0 / 128)
    f = make_signal(grid, lambda t: _gaussian(t) * np.exp(1j * math.pi * t))
    g = make_signal(grid, lambda t: np.exp(-2 * math.pi * (t - 0.5) ** 2))
    defect = multiplication_defect(f, g, 1.0)
    return defect < 1e-6, f"pairing defect {defect:.2e}"


def suite_exp_chirp() -> Tuple[bool, str]:
    alpha = math.pi / 3
    pair = exp_chirp_pair(alpha)
    f = make_signal(UniformGrid(start=0.0, step=1.0 / 128, count=12 * 128 + 1), pair.signal)
    out = symmetric_grid(4.0, 1.0 / 64)
    transformed = frft(f, alpha, out, FrftMethod.DIRECT)
    err = float(np.abs(transformed.samples - pair.transform(out.points)).max())
    return err < 2e-3, f"max pointwise error {err:.2e}"


def suite_hausdorff_young() -> Tuple[bool, str]:
    signals = generate_corpus()
    failures = 0
    for p in (1.0, 4.0 / 3.0, 2.0):
        failures += sum(not r.satisfied for r in hausdorff_young_sweep(signals, 1.0, p))
    return failures == 0, f"{failures} violations over {3 * len(signals)} checks"


# ============================================================================
# REFERENCE SIGNALS
# ============================================================================

def suite_staircase_l1() -> Tuple[bool, str]:
    n_max = 10_000
    f = staircase_signal(n_max, UniformGrid(start=0.0, step=0.5, count=20004))
    mass = integrate(f).real
    target = math.pi ** 2 / 6
    ok = abs(mass - target) < 1e-4 and abs(mass - staircase_l1_mass(n_max)) < 1e-9
    return ok, f"L1 mass {mass:.10f} (pi^2/6 = {target:.10f})"


def suite_staircase_transform() -> Tuple[bool, str]:
    alpha = math.pi / 3
    f = staircase_signal(20, UniformGrid(start=0.0, step=1.0 / 512, count=22 * 512 + 1))
    worst = 0.0
    for start in (0.2, -3.0):
        out = UniformGrid(start=start, step=0.05, count=57)
        transformed = frft(f, alpha, out, FrftMethod.DIRECT)
        closed = staircase_frft_closed_form(out.points, alpha, 20)
        worst = max(worst, float(np.abs(transformed.samples - closed).max()))
    return worst < 5e-3, f"max error {worst:.2e} on 0.2 <= |x| <= 3"


def suite_special_functions() -> Tuple[bool, str]:
    worst = 0.0
    for x in (0.5, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0):
        oracle, _ = quad(lambda t: math.sin(t * t), 0.0, x, epsabs=1e-14, limit=400)
        worst = max(worst, abs(fresnel_c(x) - oracle), abs(fresnel_c(-x) + fresnel_c(x)))
    for x in (1.0, 5.0, 10.0, 20.0):
        oracle, _ = quad(lambda t: np.sinc(t / math.pi), 0.0, x, epsabs=1e-14, limit=400)
        worst = max(worst, abs(sine_integral(x) - oracle))
    limit_ok = abs(sine_integral(100.0) - math.pi / 2) < 0.02
    return worst < 1e-10 and limit_ok, f"max deviation {worst:.2e}"


def suite_chirp_u() -> Tuple[bool, str]:
    report = adjudicate_chirp_u()
    mass = chirp_u_l1_mass(50.0)
    ok = report.max_error_derived < report.tolerance and abs(mass - (6.0 - 2.0 / 50.0)) < 1e-4
    verdict = "erratum candidate" if report.erratum_candidate else "stated form agrees"
    return ok, (
        f"derived {report.max_error_derived:.2e}, stated {min(report.max_error_integral_series, report.max_error_printed_series):.2e} "
        f"({report.closer_series} C closer, {verdict})"
    )


# ============================================================================
# MEANS
# ============================================================================

def suite_two_path_means() -> Tuple[bool, str]:
    f = make_signal(symmetric_grid(6.0, 1.0 / 128), _gaussian)
    alpha = math.pi / 4
    worst = 0.0
    for kind in (MeanKind.ABEL, MeanKind.GAUSS):
        spec = MeanSpec(kind=kind, epsilon=0.1)
        worst = max(worst, relative_l2_error(mean_via_convolution(f, spec, alpha), phi_mean(f, spec, alpha)))
    return worst < 1e-3, f"max relative L2 {worst:.2e}"


def suite_recovery() -> Tuple[bool, str]:
    alpha = math.pi / 4
    time_grid = staggered_grid(4.0, 1.0 / 64)
    transformed = make_signal(staggered_grid(8.0, 1.0 / 64), _gaussian)
    reference = make_signal(time_grid, _gaussian)
    gauss = [r.l1_error for r in recover(transformed, alpha, MeanKind.GAUSS, config.DEFAULT_EPS_SCHEDULE,
                                          time_grid, reference)]

    demo_time = staggered_grid(config.DEMO_TIME_HALF_WIDTH, config.DEMO_TIME_STEP)
    demo_freq = staggered_grid(config.DEMO_FREQ_HALF_WIDTH, config.DEMO_FREQ_STEP)
    chirp = [r.l1_error for r in recover(make_signal(demo_freq, chirp_u_frft_derived), alpha, MeanKind.ABEL,
                                          config.DEFAULT_EPS_SCHEDULE, demo_time, make_signal(demo_time, chirp_u))]
    ok = all(b < a for errs in (gauss, chirp) for a, b in zip(errs, errs[1:]))
    return ok, "gaussian " + ", ".join(f"{e:.2e}" for e in gauss) + "; chirp u " + ", ".join(f"{e:.2e}" for e in chirp)


# ============================================================================
# MULTIPLIERS
# ============================================================================

def suite_hilbert() -> Tuple[bool, str]:
    signals = generate_corpus(size=4)
    worst_two_path = 0.0
    for alpha in (math.pi / 4, math.pi / 2, 2.0):
        for f in signals:
            worst_two_path = max(worst_two_path, relative_l2_error(frac_hilbert_mult(f, alpha), frac_hilbert_pv(f, alpha)))
    worst_double = 0.0
    for alpha in (math.pi / 4, 2.0):
        f = narrow_band_setup(alpha)
        twice = frac_hilbert_mult(frac_hilbert_mult(f, alpha), alpha)
        worst_double = max(worst_double, relative_l2_error(twice.with_samples(-twice.samples), f))
    ok = worst_two_path < 1e-2 and worst_double < 1e-2
    return ok, f"two-path {worst_two_path:.2e}, H^2 + I {worst_double:.2e}"


def suite_partial_sum() -> Tuple[bool, str]:
    alpha = math.pi / 4
    f = narrow_band_setup(alpha)
    step = default_frequency_grid(f).step
    a, b = aligned_endpoint(1.5, alpha, step), aligned_endpoint(4.0, alpha, step)
    s = math.sin(alpha)
    two_path = relative_l2_error(partial_sum_hilbert(f, a, b, alpha), partial_sum_mult(f, (a * s, b * s), alpha))

    blocks = [(-6.0, 0.0), (0.0, 1.0), (1.0, 3.0), (3.0, 6.0)]
    energy = sum(lp_norm(partial_sum_mult(f, (lo, hi), alpha), 2) ** 2 for lo, hi in blocks)
    additivity = abs(energy - lp_norm(f, 2) ** 2) / lp_norm(f, 2) ** 2
    ok = two_path < 1e-6 and additivity < 1e-3
    return ok, f"two-path {two_path:.2e}, energy additivity {additivity:.2e}"


def suite_littlewood_paley() -> Tuple[bool, str]:
    alpha = math.pi / 4
    ratios = []
    for f in generate_corpus(size=4):
        for p in (4.0 / 3.0, 2.0, 4.0):
            ratios.append(lp_square_function(f, alpha, -3, 3, p).ratio)
    covering = lp_square_function(narrow_band_setup(alpha), alpha, 0, 2, 2.0).ratio
    ok = all(0.1 <= r <= 10.0 for r in ratios) and abs(covering - 1.0) < 1e-2
    return ok, f"ratios in [{min(ratios):.3f}, {max(ratios):.3f}], covering p=2 ratio {covering:.5f}"


# ============================================================================
# MULTIPLIER CONDITIONS
# ============================================================================

LOG_OSCILLATION = MultiplierFn(
    evaluator=lambda x: np.sin(np.log(np.abs(x))),
    derivative_evaluator=lambda x: np.cos(np.log(np.abs(x))) / x,
    sup_bound=1.0,
    name="sin_log",
)


def condition_reports(alpha: float = math.pi / 4) -> List[ConditionReport]:
    """Mikhlin, Hörmander and Marcinkiewicz at B = 1 for the Hilbert symbol and sin(ln|x|)"""
    probes = symmetric_grid(10.0, 1.0 / 64)
    radii = [0.01, 0.1, 1.0, 10.0, 100.0]
    reports = []
    for m in (hilbert_symbol(alpha), LOG_OSCILLATION):
        reports.append(check_mikhlin(m, 1.0, probes))
        reports.append(check_hormander(m, radii, B=1.0))
        reports.append(check_marcinkiewicz(m, range(-3, 4), B=1.0))
    return reports


SUITES: Dict[str, SuiteFn] = {
    "chirp-u": suite_chirp_u,
    "exp-chirp": suite_exp_chirp,
    "fast-vs-direct": suite_fast_vs_direct,
    "group-law": suite_group_law,
    "hausdorff-young": suite_hausdorff_young,
    "hilbert": suite_hilbert,
    "littlewood-paley": suite_littlewood_paley,
    "multiplication": suite_multiplication,
    "partial-sum": suite_partial_sum,
    "recovery": suite_recovery,
    "special-functions": suite_special_functions,
    "staircase-l1": suite_staircase_l1,
    "staircase-transform": suite_staircase_transform,
    "two-path-means": suite_two_path_means,
    "unitarity": suite_unitarity,
}


def _run_one(name: str) -> SuiteResult:
    start = time.time()
    try:
        passed, detail = SUITES[name]()
    except Exception as e:
        passed, detail = False, f"{type(e).__name__}: {e}"
    return SuiteResult(name=name, passed=bool(passed), detail=detail, seconds=round(time.time() - start, 3))


def run_suites(names: Optional[Iterable[str]] = None, max_workers: Optional[int] = None) -> List[SuiteResult]:
    """Run the named suites (all by default) concurrently; results sorted by name"""
    selected = sorted(SUITES) if names is None else sorted(set(names))
    unknown = [n for n in selected if n not in SUITES]
    if unknown:
        raise InvalidParameterError(f"unknown suite(s): {', '.join(unknown)}; choose from {', '.join(sorted(SUITES))}")
    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        results = list(pool.map(_run_one, selected))
    return sorted(results, key=lambda r: r.name)


def check_table(results: Iterable[SuiteResult]) -> pd.DataFrame:
    return pd.DataFrame(
        [{"suite": r.name, "passed": r.passed, "detail": r.detail, "seconds": r.seconds} for r in results],
        columns=["suite", "passed", "detail", "seconds"],
    )
