"""
Closed-form test assets: special functions, the staircase, the exponential
chirp and the singular chirp u with their transforms.

Series below run until a term drops under SeriesSpec.target_accuracy and
switch to oscillatory quadrature past FRESNEL_SERIES_LIMIT / SI_SERIES_LIMIT,
where the alternating terms would cost too many digits.
"""

import cmath
import math
from typing import Callable, Dict, Optional

import numpy as np
from scipy.integrate import quad, trapezoid
from scipy.special import fresnel, sici

import config
from errors import InvalidParameterError, SeriesConvergenceError, SingularPointError
from frft_engine import angle_context, kernel_value, require_generic
from models import ChirpDiscrepancyReport, ClosedFormPair, SeriesSpec, Signal, UniformGrid
from signal_core import make_signal

DEFAULT_SERIES = SeriesSpec()


# ============================================================================
# SPECIAL FUNCTIONS
# ============================================================================

def _alternating_series(first: float, ratio: Callable[[int], float], denominator: Callable[[int], float],
                        spec: SeriesSpec, name: str) -> float:
    """Σ p_n / d(n) with p_{n+1} = p_n · ratio(n)"""
    p = first
    terms = []
    for n in range(spec.max_terms):
        term = p / denominator(n)
        terms.append(term)
        if abs(term) < spec.target_accuracy:
            return math.fsum(terms)
        p *= ratio(n)
    raise SeriesConvergenceError(
        f"{name} series did not reach {spec.target_accuracy:g} within {spec.max_terms} terms"
    )


def _fresnel_sin_series(a: float, spec: SeriesSpec) -> float:
    x4 = a ** 4
    return _alternating_series(
        a ** 3,
        lambda n: -x4 / ((2 * n + 2) * (2 * n + 3)),
        lambda n: 4 * n + 3,
        spec,
        "fresnel",
    )


def _fresnel_cos_series(a: float, spec: SeriesSpec) -> float:
    x4 = a ** 4
    return _alternating_series(
        a,
        lambda n: -x4 / ((2 * n + 1) * (2 * n + 2)),
        lambda n: 4 * n + 1,
        spec,
        "fresnel (printed)",
    )


def _fresnel_tail(a: float, weight: str) -> float:
    """∫_L^a trig(t²) dt = ∫_{L²}^{a²} trig(u) / (2√u) du"""
    lower = config.FRESNEL_SERIES_LIMIT
    value, _ = quad(lambda u: 0.5 / math.sqrt(u), lower * lower, a * a,
                    weight=weight, wvar=1.0, epsabs=1e-14, limit=500)
    return value


def fresnel_c(x: float, spec: SeriesSpec = DEFAULT_SERIES) -> float:
    """
    C(x) = ∫_0^x sin t² dt.

    Series Σ (-1)^n x^(4n+3) / ((2n+1)! (4n+3)) for |x| <= FRESNEL_SERIES_LIMIT,
    continued beyond by oscillatory quadrature. Evaluated at |x| and signed,
    so C(-x) = -C(x) exactly.
    """
    a = abs(float(x))
    if a == 0.0:
        return 0.0
    if a <= config.FRESNEL_SERIES_LIMIT:
        value = _fresnel_sin_series(a, spec)
    else:
        value = _fresnel_sin_series(config.FRESNEL_SERIES_LIMIT, spec) + _fresnel_tail(a, "sin")
    return math.copysign(value, x)


def fresnel_c_printed_series(x: float, spec: SeriesSpec = DEFAULT_SERIES) -> float:
    """Σ (-1)^n x^(4n+1) / ((2n)! (4n+1)), which sums to ∫_0^x cos t² dt"""
    a = abs(float(x))
    if a == 0.0:
        return 0.0
    if a <= config.FRESNEL_SERIES_LIMIT:
        value = _fresnel_cos_series(a, spec)
    else:
        value = _fresnel_cos_series(config.FRESNEL_SERIES_LIMIT, spec) + _fresnel_tail(a, "cos")
    return math.copysign(value, x)


def _si_series(a: float, spec: SeriesSpec) -> float:
    x2 = a * a
    return _alternating_series(
        a,
        lambda n: -x2 / ((2 * n + 2) * (2 * n + 3)),
        lambda n: 2 * n + 1,
        spec,
        "sine integral",
    )


def sine_integral(x: float, spec: SeriesSpec = DEFAULT_SERIES) -> float:
    """Si(x) = ∫_0^x sin t / t dt; odd, tends to π/2"""
    a = abs(float(x))
    if a == 0.0:
        return 0.0
    if a <= config.SI_SERIES_LIMIT:
        value = _si_series(a, spec)
    else:
        lower = config.SI_SERIES_LIMIT
        tail, _ = quad(lambda t: 1.0 / t, lower, a, weight="sin", wvar=1.0, epsabs=1e-14, limit=500)
        value = _si_series(lower, spec) + tail
    return math.copysign(value, x)


# ============================================================================
# STAIRCASE  f = Σ n χ[n, n + 1/n³)
# ============================================================================

def _require_terms(n_max: int) -> None:
    if n_max < 1:
        raise InvalidParameterError(f"n_max must be at least 1, got {n_max}")


def staircase_l1_mass(n_max: int) -> float:
    """Σ_{n<=n_max} 1/n², increasing towards π²/6"""
    _require_terms(n_max)
    return math.fsum(1.0 / (n * n) for n in range(1, n_max + 1))


def staircase_l2_mass(n_max: int) -> float:
    """Σ_{n<=n_max} 1/n, the squared L² norm of the truncation"""
    _require_terms(n_max)
    return math.fsum(1.0 / n for n in range(1, n_max + 1))


def _hat_antiderivative(u: np.ndarray, h: float) -> np.ndarray:
    """∫_{-inf}^u of the unit hat supported on [-h, h]"""
    u = np.clip(u, -h, h)
    left = (u + h) ** 2 / (2.0 * h)
    right = h - (h - u) ** 2 / (2.0 * h)
    return np.where(u <= 0.0, left, right)


def _hat_mass(lo: np.ndarray, width: float, h: float) -> np.ndarray:
    """
    ∫_lo^{lo+width} hat. Blocks inside one linear piece use width·hat(mid),
    which keeps full relative accuracy for widths far below the step.
    """
    hi = lo + width
    pieces = np.array([-h, 0.0, h])
    single = np.searchsorted(pieces, lo, side="right") == np.searchsorted(pieces, hi, side="left")
    mid = lo + width / 2.0
    linear = width * np.clip(1.0 - np.abs(mid) / h, 0.0, None)
    exact = _hat_antiderivative(hi, h) - _hat_antiderivative(lo, h)
    return np.where(single, linear, exact)


def staircase_signal(n_max: int, grid: UniformGrid, n_resolve: Optional[int] = None) -> Signal:
    """
    Truncated staircase projected onto the grid's hat functions, so the
    trapezoid mass of every block is n · n⁻³ whatever its width. Blocks past
    n_resolve are deposited on the nearest sample instead.
    """
    _require_terms(n_max)
    h = grid.step
    last = n_max + 1.0 / n_max ** 3
    if grid.start > 1.0 - h or grid.end < last + h - 1e-9 * h:
        raise InvalidParameterError(
            f"grid {grid.spec()} must cover [{1.0 - h}, {last + h}] for n_max={n_max}"
        )
    n_resolve = n_max if n_resolve is None else n_resolve
    values = np.zeros(grid.count)
    for n in range(1, n_max + 1):
        width = 1.0 / n ** 3
        if n > n_resolve:
            i = int(round((n + width / 2.0 - grid.start) / h))
            values[i] += n * width / h
            continue
        i0 = max(int(math.floor((n - h - grid.start) / h)), 0)
        i1 = min(int(math.ceil((n + width + h - grid.start) / h)) + 1, grid.count)
        centres = grid.start + h * np.arange(i0, i1)
        values[i0:i1] += n * _hat_mass(n - centres, width, h) / h
    return Signal(grid=grid, samples=values)


def _block_integral(n: int, x: np.ndarray, cot_a: float, csc_a: float) -> np.ndarray:
    """∫_n^{n+1/n³} exp(i(c t² - b t)) dt with c = π cot α, b = 2π x csc α"""
    h = 1.0 / n ** 3
    c = math.pi * cot_a
    b = 2.0 * math.pi * x * csc_a
    scale = math.sqrt(2.0 * abs(c) / math.pi)
    if n <= config.STAIRCASE_EXACT_BLOCKS and scale * h >= 1e-6:
        t0 = b / (2.0 * c)
        s_hi, c_hi = fresnel((n + h - t0) * scale)
        s_lo, c_lo = fresnel((n - t0) * scale)
        orient = 1.0 if c > 0 else -1.0
        core = (c_hi - c_lo) + 1j * orient * (s_hi - s_lo)
        return np.exp(-1j * b * b / (4.0 * c)) * core / scale
    m = n + h / 2.0
    phase = c * m * m - b * m
    slope = 2.0 * c * m - b
    return h * np.exp(1j * phase) * np.sinc(slope * h / (2.0 * math.pi))


def staircase_frft_closed_form(x, alpha: float, n_terms: int, exact_chirp: bool = True):
    """
    F_α of the staircase truncated at n_terms. exact_chirp integrates every
    block against the full kernel; otherwise the series

        A_α e^{iπx² cot α} / (2πix) Σ n e^{-2nπix} (1 - e^{-2πix/n³})

    that drops the chirp inside each block.
    """
    _require_terms(n_terms)
    ctx = angle_context(alpha)
    require_generic(ctx)
    xs = np.asarray(x, dtype=float)
    if np.any(xs == 0.0):
        raise SingularPointError("staircase transform has a removable singularity at x = 0")
    prefactor = ctx.a_alpha * np.exp(1j * math.pi * ctx.cot_a * xs * xs)
    total = np.zeros(xs.shape, dtype=complex)
    for n in range(1, n_terms + 1):
        if exact_chirp:
            total += n * _block_integral(n, xs, ctx.cot_a, ctx.csc_a)
        else:
            total += n * np.exp(-2j * n * math.pi * xs) * (1.0 - np.exp(-2j * math.pi * xs / n ** 3))
    if not exact_chirp:
        total = total / (2j * math.pi * xs)
    value = prefactor * total
    return complex(value) if value.ndim == 0 else value


# ============================================================================
# EXPONENTIAL CHIRP
# ============================================================================

def exp_chirp_pair(alpha: float) -> ClosedFormPair:
    """f(t) = exp(-π(2t + i t² cot α)) for t >= 0 and its transform"""
    ctx = angle_context(alpha)
    require_generic(ctx)
    cot_a, csc_a, a_alpha = ctx.cot_a, ctx.csc_a, ctx.a_alpha

    def signal(t):
        t = np.asarray(t, dtype=float)
        tp = np.maximum(t, 0.0)
        return np.where(t >= 0.0, np.exp(-math.pi * (2.0 * tp + 1j * tp * tp * cot_a)), 0.0)

    def transform(x):
        x = np.asarray(x, dtype=float)
        return a_alpha * np.exp(1j * math.pi * cot_a * x * x) / (2.0 * math.pi * (1.0 + 1j * x * csc_a))

    def printed_transform(x):
        x = np.asarray(x, dtype=float)
        return a_alpha * np.exp(1j * math.pi * cot_a * x * x) / (2.0 * math.pi * (1.0 + 1j * x))

    return ClosedFormPair(alpha=ctx.alpha, signal=signal, transform=transform, printed_transform=printed_transform)


# ============================================================================
# CHIRP u
# ============================================================================

def chirp_u(t):
    """e^{-iπt²}/√|t| on 0 < |t| < 1 and e^{-iπt²}/t² beyond"""
    ts = np.asarray(t, dtype=float)
    if np.any(ts == 0.0):
        raise SingularPointError("u is singular at t = 0")
    a = np.abs(ts)
    envelope = np.where(a < 1.0, 1.0 / np.sqrt(a), 1.0 / (a * a))
    value = np.exp(-1j * math.pi * ts * ts) * envelope
    return complex(value) if value.ndim == 0 else value


def chirp_u_frft(w, spec: SeriesSpec = DEFAULT_SERIES, fresnel_series: str = "integral"):
    """
    The stated closed form at α = π/4

        2 e^{iπw²} [C(2^{5/4}√|w|) / (2^{1/4}√|w|) - √2π²|w|
                    + 2√2πw Si(2√2πw) + cos(2√2πw)]

    with C taken from the integral definition or from the printed series.
    """
    if fresnel_series not in ("integral", "printed"):
        raise InvalidParameterError(f"unknown fresnel series {fresnel_series!r}")
    c_fn = fresnel_c if fresnel_series == "integral" else fresnel_c_printed_series
    ws = np.asarray(w, dtype=float)
    if np.any(ws == 0.0):
        raise SingularPointError("stated chirp transform is singular at w = 0")

    def one(wv: float) -> complex:
        aw = abs(wv)
        root = math.sqrt(aw)
        k = 2.0 * math.sqrt(2.0) * math.pi * wv
        bracket = (
            c_fn(2.0 ** 1.25 * root, spec) / (2.0 ** 0.25 * root)
            - math.sqrt(2.0) * math.pi ** 2 * aw
            + k * sine_integral(k, spec)
            + math.cos(k)
        )
        return 2.0 * cmath.exp(1j * math.pi * wv * wv) * bracket

    values = np.array([one(float(v)) for v in ws.reshape(-1)], dtype=complex).reshape(ws.shape)
    return complex(values) if values.ndim == 0 else values


def chirp_u_frft_derived(w):
    """
    F_{π/4}u with the chirps cancelled and the even profile integrated:

        2 A e^{iπw²} [(2/√k) ∫_0^√k cos y² dy + cos k + k (Si(k) - π/2)],  k = 2√2π|w|

    Finite at w = 0 with value 6A.
    """
    ctx = angle_context(config.CHIRP_U_ALPHA)
    ws = np.asarray(w, dtype=float)
    k = 2.0 * math.sqrt(2.0) * math.pi * np.abs(ws)
    root = np.sqrt(k)
    _, c_cos = fresnel(root * math.sqrt(2.0 / math.pi))
    si, _ = sici(k)
    safe_root = np.where(k > 0, root, 1.0)
    head = np.where(k > 0, 2.0 * math.sqrt(math.pi / 2.0) * c_cos / safe_root, 2.0)
    bracket = head + np.cos(k) + k * (si - math.pi / 2.0)
    value = 2.0 * ctx.a_alpha * np.exp(1j * math.pi * ws * ws) * bracket
    return complex(value) if value.ndim == 0 else value


def chirp_u_graded_oracle(w, alpha: float = config.CHIRP_U_ALPHA,
                          truncation: float = config.CHIRP_U_TRUNCATION):
    """
    ∫_{-T}^{T} K_α(w, t) u(t) dt by trapezoid quadrature. On (0, 1) the
    substitution t = s² removes the t^(-1/2) singularity; [1, T] uses a
    uniform step.
    """
    ctx = angle_context(alpha)
    require_generic(ctx)
    ws = np.atleast_1d(np.asarray(w, dtype=float))
    s = np.linspace(0.0, 1.0, config.CHIRP_U_INNER_POINTS)
    n_tail = int(round((truncation - 1.0) / config.CHIRP_U_TAIL_STEP)) + 1
    t_tail = np.linspace(1.0, truncation, n_tail)
    s_chirp = np.exp(-1j * math.pi * s ** 4)
    tail_u = np.exp(-1j * math.pi * t_tail ** 2) / t_tail ** 2

    out = np.empty(ws.shape, dtype=complex)
    for i, wv in enumerate(ws):
        total = 0j
        for sign in (1.0, -1.0):
            inner = 2.0 * kernel_value(ctx, wv, sign * s * s) * s_chirp
            tail = kernel_value(ctx, wv, sign * t_tail) * tail_u
            total += trapezoid(inner, s) + trapezoid(tail, t_tail)
        out[i] = total
    return complex(out[0]) if np.ndim(w) == 0 else out


def chirp_u_l1_mass(half_width: float) -> float:
    """∫_{-L}^{L} |u| on the same graded grid as the oracle (exactly 6 - 2/L)"""
    if half_width < 1.0:
        raise InvalidParameterError("half_width must be at least 1")
    s = np.linspace(0.0, 1.0, config.CHIRP_U_INNER_POINTS)
    inner = trapezoid(np.full(s.shape, 2.0), s)
    n_tail = max(int(round((half_width - 1.0) / config.CHIRP_U_TAIL_STEP)), 1) + 1
    t = np.linspace(1.0, half_width, n_tail)
    return 2.0 * (inner + trapezoid(1.0 / t ** 2, t))


def adjudicate_chirp_u(
    probes: Optional[np.ndarray] = None,
    spec: SeriesSpec = DEFAULT_SERIES,
    tolerance: float = config.CHIRP_U_AGREEMENT,
) -> ChirpDiscrepancyReport:
    """Compare the stated and derived closed forms with the graded oracle"""
    if probes is None:
        half = np.linspace(0.2, 3.0, 15)
        probes = np.concatenate([-half[::-1], half])
    probes = np.asarray(probes, dtype=float)
    oracle = chirp_u_graded_oracle(probes)
    err_integral = float(np.abs(chirp_u_frft(probes, spec, "integral") - oracle).max())
    err_printed = float(np.abs(chirp_u_frft(probes, spec, "printed") - oracle).max())
    err_derived = float(np.abs(chirp_u_frft_derived(probes) - oracle).max())
    return ChirpDiscrepancyReport(
        probe_count=int(probes.size),
        tolerance=tolerance,
        max_error_integral_series=err_integral,
        max_error_printed_series=err_printed,
        max_error_derived=err_derived,
        closer_series="integral" if err_integral <= err_printed else "printed",
        erratum_candidate=min(err_integral, err_printed) > tolerance,
    )


# ============================================================================
# ASSET REGISTRY
# ============================================================================

def _gaussian(t):
    return np.exp(-math.pi * np.asarray(t, dtype=float) ** 2)


def _poisson(t):
    return (1.0 / math.pi) / (1.0 + np.asarray(t, dtype=float) ** 2)


def _weierstrass(t):
    return np.exp(-np.asarray(t, dtype=float) ** 2 / 4.0) / math.sqrt(4.0 * math.pi)


STAIRCASE_ASSET_TERMS = 20

ASSETS: Dict[str, str] = {
    "staircase": "Σ n χ[n, n+1/n³), n <= 20, hat-projected",
    "expchirp": "exp(-π(2t + it² cot α)) for t >= 0",
    "chirp-u": "e^{-iπt²}/√|t| inside (-1, 1), e^{-iπt²}/t² outside",
    "gaussian": "exp(-πt²)",
    "poisson": "Poisson kernel P_1",
    "weierstrass": "Weierstrass kernel W_1",
}


def build_asset(name: str, grid: UniformGrid, alpha: Optional[float] = None) -> Signal:
    """Sample a named asset on `grid`; expchirp needs the order alpha"""
    if name == "staircase":
        return staircase_signal(STAIRCASE_ASSET_TERMS, grid)
    if name == "expchirp":
        if alpha is None:
            raise InvalidParameterError("asset 'expchirp' needs an order alpha")
        return make_signal(grid, exp_chirp_pair(alpha).signal)
    if name == "chirp-u":
        return make_signal(grid, chirp_u)
    if name == "gaussian":
        return make_signal(grid, _gaussian)
    if name == "poisson":
        return make_signal(grid, _poisson)
    if name == "weierstrass":
        return make_signal(grid, _weierstrass)
    raise InvalidParameterError(f"unknown asset {name!r}; choose from {', '.join(ASSETS)}")
