"""
Pydantic models for FRFT-LAB
Grids, sampled signals, transform orders, summability and multiplier specs, and
the reports every checker returns.
"""

import math
from enum import Enum
from typing import Any, Callable, List, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

import config


# ============================================================================
# ENUMS - Categorical Fields
# ============================================================================

class AngleClass(str, Enum):
    """How an order alpha sits relative to the multiples of π"""
    GENERIC = "generic"
    IDENTITY = "identity"
    REFLECTION = "reflection"
    NEAR_SINGULAR = "near_singular"


class FrftMethod(str, Enum):
    """Evaluation path for a generic-order transform"""
    DIRECT = "direct"
    FAST = "fast"


class MeanKind(str, Enum):
    """Summability method for damped inversion"""
    ABEL = "abel"
    GAUSS = "gauss"
    CUSTOM = "custom"


class Command(str, Enum):
    """CLI commands"""
    FRFT = "frft"
    INVERT = "invert"
    RECOVER = "recover"
    CONVOLVE = "convolve"
    HILBERT = "hilbert"
    PARTIALSUM = "partialsum"
    LPDECOMP = "lpdecomp"
    CHECK = "check"
    DEMO = "demo"


# ============================================================================
# MODEL 1: UniformGrid - Sample Locations
# ============================================================================

class UniformGrid(BaseModel):
    """
    Uniform sample locations start + i*step, 0 <= i < count.
    Closed at both ends; signals are zero outside.
    """
    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={"example": {"start": -8.0, "step": 0.015625, "count": 1025}},
    )

    start: float = Field(..., description="Abscissa of the first sample")
    step: float = Field(..., gt=0, description="Sample spacing")
    count: int = Field(..., ge=1, description="Number of samples")

    @field_validator("start", "step")
    @classmethod
    def validate_finite(cls, v):
        if not math.isfinite(v):
            raise ValueError("grid parameters must be finite")
        return v

    def point(self, i: int) -> float:
        return self.start + i * self.step

    @property
    def points(self) -> np.ndarray:
        return self.start + self.step * np.arange(self.count)

    @property
    def end(self) -> float:
        return self.point(self.count - 1)

    @property
    def half_width(self) -> float:
        """Largest |abscissa| on the grid"""
        return max(abs(self.start), abs(self.end))

    def same_as(self, other: "UniformGrid", rtol: float = 1e-12) -> bool:
        scale = max(abs(self.start), abs(self.end), self.step)
        return (
            self.count == other.count
            and abs(self.step - other.step) <= rtol * self.step
            and abs(self.start - other.start) <= rtol * scale
        )

    def spec(self) -> str:
        """start:step:count form used on the command line"""
        return f"{self.start!r}:{self.step!r}:{self.count}"


# ============================================================================
# MODEL 2: Signal - Complex Samples Over a Grid
# ============================================================================

class Signal(BaseModel):
    """
    Complex samples over a UniformGrid. Samples are stored read-only.
    `profile` keeps the pointwise generator when the signal came from a
    closed form, so resampling and dilation can stay exact.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    grid: UniformGrid = Field(..., description="Sample locations")
    samples: np.ndarray = Field(..., description="Complex sample values, one per grid point")
    profile: Optional[Callable[[np.ndarray], Any]] = Field(
        None, exclude=True, description="Pointwise generator, if known"
    )

    @field_validator("samples", mode="before")
    @classmethod
    def coerce_samples(cls, v):
        arr = np.array(v, dtype=complex).reshape(-1)
        arr.flags.writeable = False
        return arr

    @model_validator(mode="after")
    def validate_samples(self):
        if self.samples.shape[0] != self.grid.count:
            raise ValueError(
                f"{self.samples.shape[0]} samples for a grid of {self.grid.count} points"
            )
        bad = np.flatnonzero(~np.isfinite(self.samples))
        if bad.size:
            raise ValueError(f"non-finite sample at index {int(bad[0])}")
        return self

    @property
    def t(self) -> np.ndarray:
        return self.grid.points

    def with_samples(self, samples, profile: Optional[Callable] = None) -> "Signal":
        return Signal(grid=self.grid, samples=samples, profile=profile)


# ============================================================================
# MODEL 3: LpExponent
# ============================================================================

class LpExponent(BaseModel):
    """Lebesgue exponent p in [1, inf] with its dual p' = p/(p-1)"""
    model_config = ConfigDict(frozen=True)

    p: float = Field(..., ge=1.0, description="Exponent; math.inf for the sup norm")

    @property
    def dual(self) -> float:
        if self.p == 1.0:
            return math.inf
        if math.isinf(self.p):
            return 1.0
        return self.p / (self.p - 1.0)


# ============================================================================
# MODEL 4: AngleContext - Classified Order With Cached Coefficients
# ============================================================================

class AngleContext(BaseModel):
    """
    Order alpha reduced into [0, 2π) with its class and the kernel
    coefficients cot α, csc α and A_α = sqrt(1 - i cot α) (principal root).
    For the exact special classes cot is stored as 0 and csc as inf.
    """
    model_config = ConfigDict(frozen=True)

    alpha: float = Field(..., ge=0.0, lt=config.TWO_PI, description="Reduced order")
    angle_class: AngleClass
    cot_a: float
    csc_a: float
    a_alpha: complex
    delta_sing: float = Field(config.DELTA_SING, gt=0)

    @property
    def is_generic(self) -> bool:
        return self.angle_class == AngleClass.GENERIC


# ============================================================================
# MODEL 5: Summability Specs
# ============================================================================

class MeanSpec(BaseModel):
    """
    Summability method and its parameter. For Gauss means the matching
    heat-kernel parameter is epsilon squared.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: MeanKind
    epsilon: float = Field(..., gt=0, description="Mean parameter")
    phi: Optional[Callable[[np.ndarray], Any]] = Field(
        None, description="Damping profile Φ with Φ(0) = 1 (custom kind)"
    )
    kernel: Optional[Callable[[np.ndarray], Any]] = Field(
        None, description="Fourier transform of Φ, needed by the convolution path (custom kind)"
    )

    @model_validator(mode="after")
    def validate_custom(self):
        if self.kind == MeanKind.CUSTOM:
            if self.phi is None:
                raise ValueError("custom means need a damping profile phi")
            at_zero = complex(np.asarray(self.phi(np.zeros(1)), dtype=complex).reshape(-1)[0])
            if abs(at_zero - 1.0) >= 1e-12:
                raise ValueError(f"phi(0) must be 1, got {at_zero}")
        return self

    @property
    def heat_parameter(self) -> float:
        """Weierstrass parameter paired with this mean (eps for Abel, eps^2 for Gauss)"""
        return self.epsilon ** 2 if self.kind == MeanKind.GAUSS else self.epsilon

    def damping(self, x: np.ndarray, csc_a: float) -> np.ndarray:
        """Φ(ε·x·csc α) on frequency samples x"""
        y = self.epsilon * np.asarray(x, dtype=float) * csc_a
        if self.kind == MeanKind.ABEL:
            return np.exp(-2.0 * math.pi * np.abs(y))
        if self.kind == MeanKind.GAUSS:
            return np.exp(-4.0 * math.pi ** 2 * y ** 2)
        return np.asarray(self.phi(y), dtype=complex)


class EpsilonSchedule(BaseModel):
    """Strictly decreasing positive epsilon values"""
    model_config = ConfigDict(frozen=True)

    values: Tuple[float, ...] = Field(config.DEFAULT_EPS_SCHEDULE)

    @field_validator("values")
    @classmethod
    def validate_decreasing(cls, v):
        if any(e <= 0 for e in v):
            raise ValueError("epsilon values must be positive")
        if any(b >= a for a, b in zip(v, v[1:])):
            raise ValueError("epsilon schedule must be strictly decreasing")
        return v


class SeriesSpec(BaseModel):
    """Stopping rule for alternating power series"""
    model_config = ConfigDict(frozen=True)

    max_terms: int = Field(config.SERIES_MAX_TERMS, ge=1)
    target_accuracy: float = Field(config.SERIES_TARGET, gt=0)


# ============================================================================
# MODEL 6: Multipliers
# ============================================================================

class MultiplierFn(BaseModel):
    """
    Bounded symbol of the frequency variable. derivative_evaluator is
    optional; checkers fall back to central differences.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    evaluator: Callable[[np.ndarray], Any]
    sup_bound: float = Field(..., ge=0, description="Declared sup norm")
    derivative_evaluator: Optional[Callable[[np.ndarray], Any]] = None
    name: str = "m"

    def __call__(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return np.broadcast_to(np.asarray(self.evaluator(x), dtype=complex), x.shape).copy()

    def derivative(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if self.derivative_evaluator is not None:
            return np.broadcast_to(
                np.asarray(self.derivative_evaluator(x), dtype=complex), x.shape
            ).copy()
        h = config.FD_RELATIVE_STEP * np.maximum(1.0, np.abs(x))
        return (self(x + h) - self(x - h)) / (2.0 * h)


class DyadicIntervalAlpha(BaseModel):
    """
    Fractional binary interval ±[2^j sin α, 2^(j+1) sin α], returned with
    its endpoints ordered low < high whatever the sign of sin α.
    """
    model_config = ConfigDict(frozen=True)

    j: int
    sign: Literal[1, -1]
    alpha: float

    @property
    def endpoints(self) -> Tuple[float, float]:
        s = math.sin(self.alpha)
        a, b = self.sign * (2.0 ** self.j) * s, self.sign * (2.0 ** (self.j + 1)) * s
        return (min(a, b), max(a, b))


# ============================================================================
# MODEL 7: Reports
# ============================================================================

class HausdorffYoungReport(BaseModel):
    alpha: float
    p: float
    lhs: float = Field(..., description="||F_α f||_{p'}")
    rhs: float = Field(..., description="|A_α|^{2/p-1} ||f||_p")
    satisfied: bool


class ConditionReport(BaseModel):
    """One multiplier-condition check; serializes to checker,param,value,pass"""
    checker: str
    param: float = Field(..., description="Bound under test (nan when none was given)")
    value: float = Field(..., description="Empirical quantity")
    passed: bool

    def to_row(self) -> dict:
        return {"checker": self.checker, "param": self.param, "value": self.value, "pass": self.passed}


class BernsteinReport(BaseModel):
    l2_m: float
    l2_mprime: float
    bound: float


class RecoveryRow(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    eps: float
    heat_parameter: float
    signal: Signal
    l1_error: Optional[float] = None


class SquareFunctionResult(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    square_fn: Signal
    norm: float
    ratio: float
    blocks: int


class ChirpDiscrepancyReport(BaseModel):
    """Stated chirp transform against the graded quadrature oracle"""
    probe_count: int
    tolerance: float
    max_error_integral_series: float = Field(..., description="Stated form, C from ∫ sin t²")
    max_error_printed_series: float = Field(..., description="Stated form, C from the printed series")
    max_error_derived: float = Field(..., description="Derived closed form")
    closer_series: Literal["integral", "printed"]
    erratum_candidate: bool


class ClosedFormPair(BaseModel):
    """A signal and its closed-form transform at one order"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    alpha: float
    signal: Callable[[np.ndarray], Any]
    transform: Callable[[np.ndarray], Any]
    printed_transform: Optional[Callable[[np.ndarray], Any]] = None


class SuiteResult(BaseModel):
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0


# ============================================================================
# MODEL 8: RunConfig - Resolved CLI Invocation
# ============================================================================

class RunConfig(BaseModel):
    command: Command
    alpha: float = 0.0
    grid: Optional[UniformGrid] = None
    inputs: List[str] = Field(default_factory=list)
    asset: Optional[str] = None
    output: Optional[str] = None
    method: FrftMethod = FrftMethod.FAST
    mean: MeanKind = MeanKind.ABEL
    eps: Tuple[float, ...] = config.DEFAULT_EPS_SCHEDULE
    p: float = 2.0
    seed: int = config.RANDOM_SEED

    @field_validator("eps")
    @classmethod
    def validate_eps(cls, v):
        return EpsilonSchedule(values=v).values
