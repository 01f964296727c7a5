"""
FRFT-LAB Configuration
Single source of truth for tolerances, numerical defaults, and output layout.
"""

import math

# ============================================================================
# ANGLE CLASSIFICATION
# ============================================================================

DELTA_SING = 1e-3                       # Radians; distance to a multiple of π that counts as near-singular
EXACT_ANGLE_TOL = 1e-12                 # Closer than this to a multiple of π counts as exactly special
TWO_PI = 2.0 * math.pi

# ============================================================================
# QUADRATURE & RESOLUTION
# ============================================================================

BANDWIDTH_FRACTION = 0.25               # Default declared bandwidth B_f = BANDWIDTH_FRACTION / step
RESOLUTION_LIMIT = 0.5                  # step * (B_f + T|cot| + X|csc|) must stay below this
DIRECT_BLOCK_ROWS = 256                 # Output rows per block in the direct oracle
SPACING_RTOL = 1e-9                     # Uniform spacing check for CSV readers
BOUNDARY_DECAY_RATIO = 1e-6             # Boundary sample / peak sample before a decay warning

# ============================================================================
# MEANS & APPROXIMATE IDENTITIES
# ============================================================================

DEFAULT_EPS_SCHEDULE = (1.0, 0.1, 0.01)
DAMPING_FLOOR = 1e-8                    # Damping factor at the edge of the internal frequency grid
MASS_TOLERANCE = 1e-3                   # |∫φ - 1| allowed before a mass warning
ABEL_HALF_WIDTH_FACTOR = 50.0           # Minimum grid half-width for Abel recovery, times eps_max

# ============================================================================
# MULTIPLIERS & CONDITION CHECKERS
# ============================================================================

FD_RELATIVE_STEP = 1e-4                 # Central difference step h = FD_RELATIVE_STEP * max(1, |x|)
FREQ_OVERSAMPLING = 4                   # Default multiplier frequency step = input step / FREQ_OVERSAMPLING
MIKHLIN_SLACK = 1e-6
SUP_BOUND_SLACK = 1e-9
ANNULUS_POINTS = 4001                   # Trapezoid points per annulus side (Hörmander)
DYADIC_POINTS = 4001                    # Trapezoid points per dyadic interval (Marcinkiewicz)
HAUSDORFF_YOUNG_SLACK = 1e-3

# ============================================================================
# SPECIAL FUNCTIONS
# ============================================================================

FRESNEL_SERIES_LIMIT = 4.0              # |x| above this continues by oscillatory quadrature
SI_SERIES_LIMIT = 15.0
SERIES_MAX_TERMS = 200
SERIES_TARGET = 1e-17                   # Stop once |term| drops below this

# ============================================================================
# REFERENCE ASSETS
# ============================================================================

CHIRP_U_ALPHA = math.pi / 4
CHIRP_U_TRUNCATION = 40.0               # Oracle integrates over [-T, T]
CHIRP_U_AGREEMENT = 5e-2                # Closed form vs oracle, max abs error on 0.2 <= |w| <= 3
CHIRP_U_INNER_POINTS = 4001             # Trapezoid points in s on (0, 1] after t = s^2
CHIRP_U_TAIL_STEP = 1.0 / 256           # Uniform step on [1, T]
STAIRCASE_EXACT_BLOCKS = 20             # Blocks integrated with Fresnel integrals; midpoint linear phase beyond

# ============================================================================
# DEMO PIPELINE (chirp recovery)
# ============================================================================

DEMO_TIME_HALF_WIDTH = 4.0
DEMO_TIME_STEP = 1.0 / 256
DEMO_FREQ_HALF_WIDTH = 64.0
DEMO_FREQ_STEP = 1.0 / 320

# ============================================================================
# OUTPUT & CLI
# ============================================================================

RANDOM_SEED = 42                        # For reproducible corpora
OUTPUT_DIR = "results"
CSV_FLOAT_FORMAT = "%.15e"
RUN_SUMMARY_FILE = "run_summary.json"
RECOVERY_TABLE_FILE = "recovery_errors.csv"
CHECK_TABLE_FILE = "check_results.csv"
CONDITION_TABLE_FILE = "condition_reports.csv"
CHIRP_U_FILE = "chirp_u.csv"            # u on the demo time grid
CHIRP_U_FRFT_FILE = "chirp_u_frft.csv"   # F_{π/4} u on the demo frequency grid

EXIT_OK = 0
EXIT_CHECK_FAILED = 1                   # `check` had a failing suite or `demo` errors did not decrease
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_IO = 4

# Corpus generation
CORPUS_SIZE = 10
CORPUS_HALF_WIDTH = 8.0
CORPUS_STEP = 1.0 / 128
CORPUS_MAX_SHIFT = 1.5                  # |time shift| and |modulation| of each Gaussian atom
CORPUS_WIDTH_RANGE = (0.7, 1.4)
CORPUS_ATOMS = 3

# Narrow-band signals for the partial-sum and Littlewood-Paley suites
NARROW_BAND_TIME_HALF_WIDTH = 12.0
NARROW_BAND_TIME_STEP = 1.0 / 128
NARROW_BAND_FREQ_HALF_WIDTH = 8.0
NARROW_BAND_WIDTH = 0.3                 # Bump width in the F_α domain
