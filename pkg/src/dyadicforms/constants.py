"""
Numerical defaults for dyadicforms.

Every decision the library makes (valuations, defects, Hilbert symbols,
criterion inequalities) reads at most 2e + O(1) pi-adic digits past the
valuation of its inputs, so the precision defaults below are generous
rather than tuned.

Constants are grouped by category:
- Precision: default working precision and storage head-room
- Search bounds: finite searches used to build the square-class tables
- Sampling: random lattice generator used by crosscheck
- Output: schema version of the JSON payloads
"""

import math

# =============================================================================
# Precision
# =============================================================================

# default_prec = DEFAULT_PREC_PER_E * e + DEFAULT_PREC_OFFSET (absolute pi-digits)
DEFAULT_PREC_PER_E: int = 6
DEFAULT_PREC_OFFSET: int = 12

# Extra 2-adic bits kept on every O_0 coefficient beyond ceil(prec / e)
COEFF_GUARD_BITS: int = 2

# Sentinel for "ignored" alpha/beta and for d of a square
INFINITY: float = math.inf

# =============================================================================
# Search bounds
# =============================================================================

# Longest digit string tried when collecting norms 1 - c*y^2 (in units of e)
NORM_SEARCH_MAX_DIGITS_PER_E: int = 2
NORM_SEARCH_MIN_DIGITS: int = 3

# =============================================================================
# Sampling
# =============================================================================

# Share of increments drawn from the boundary values {-2e, 2-2e, 1, 2e, 2e+1}
SAMPLER_BOUNDARY_BIAS: float = 0.3

# Candidates tried per position before falling back to a non-negative step
SAMPLER_ATTEMPTS_PER_ENTRY: int = 24

# Extra ranks above n+2 used by crosscheck (ranks n+2 .. n+2+CROSSCHECK_EXTRA_RANK)
CROSSCHECK_EXTRA_RANK: int = 3

# Default R bound for crosscheck samples, in units of e, plus an offset
CROSSCHECK_R_BOUND_PER_E: int = 2
CROSSCHECK_R_BOUND_OFFSET: int = 2

# =============================================================================
# Output
# =============================================================================

SCHEMA_VERSION: str = "1.0"

# Hilbert/Hasse convention recorded in every JSON payload
HASSE_CONVENTION: str = "prod_{i<j} (a_i, a_j)"
