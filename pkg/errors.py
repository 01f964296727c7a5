"""
Error types for FRFT-LAB.

Every error carries the CLI exit code it maps to. Usage errors are also
ValueErrors so callers that only know the standard hierarchy still catch them.
"""

import config


class FrftLabError(Exception):
    """Base class for all lab errors"""
    exit_code = config.EXIT_USAGE


# ============================================================================
# USAGE / VALIDATION (exit 2)
# ============================================================================

class InvalidParameterError(FrftLabError, ValueError):
    """A parameter is outside its admissible range"""


class InvalidExponentError(InvalidParameterError):
    """Lebesgue exponent outside the range an operation accepts"""

    def __init__(self, p: float, allowed: str = "[1, inf]"):
        self.p = p
        super().__init__(f"invalid exponent p={p}; allowed {allowed}")


class GridMismatchError(FrftLabError, ValueError):
    """Two signals that must share a grid (or a step) do not"""


class NonFiniteSampleError(FrftLabError, ValueError):
    """A sample is NaN or infinite"""

    def __init__(self, index: int, value=None):
        self.index = index
        super().__init__(f"non-finite sample at index {index}: {value!r}")


class EmptyIntervalError(FrftLabError, ValueError):
    """Partial-sum interval with no interior"""


class EmptyScheduleError(FrftLabError, ValueError):
    """Recovery requested with no epsilon values"""


class SingularPointError(FrftLabError, ValueError):
    """Closed form evaluated at its singular point"""


class DegenerateSymbolError(FrftLabError, ValueError):
    """Multiplier symbol undefined at this order (sgn((π-α)ω) with α = π)"""


# ============================================================================
# NUMERIC PRECONDITIONS (exit 3)
# ============================================================================

class NumericPreconditionError(FrftLabError):
    exit_code = config.EXIT_PRECONDITION


class AliasingRiskError(NumericPreconditionError):
    """Grid too coarse for the chirp and output frequencies requested"""

    def __init__(self, bound: float, limit: float = config.RESOLUTION_LIMIT):
        self.bound = bound
        self.limit = limit
        super().__init__(f"aliasing risk: resolution bound {bound:.6g} >= {limit}")


class NearSingularOrderError(NumericPreconditionError):
    """Order within delta_sing of a multiple of π but not exactly special"""

    def __init__(self, alpha: float, delta_sing: float):
        self.alpha = alpha
        self.delta_sing = delta_sing
        super().__init__(
            f"order alpha={alpha:.12g} is within {delta_sing:g} of a multiple of pi; "
            f"compose F_(alpha-pi) with reflection instead"
        )


class KernelUndefinedError(NumericPreconditionError):
    """Kernel requested for an order whose kernel is not an integral operator"""


class SeriesConvergenceError(NumericPreconditionError):
    """Series did not reach its target accuracy within max_terms"""


class SupBoundViolationError(NumericPreconditionError):
    """Multiplier exceeds its declared sup bound at a probe point"""


# ============================================================================
# I/O (exit 4)
# ============================================================================

class SignalFileError(FrftLabError):
    exit_code = config.EXIT_IO


# ============================================================================
# WARNINGS (computation proceeds)
# ============================================================================

class MassConditionWarning(UserWarning):
    """Approximate-identity kernel does not integrate to 1"""


class BoundaryDecayWarning(UserWarning):
    """Signal has not decayed at the grid boundary"""
