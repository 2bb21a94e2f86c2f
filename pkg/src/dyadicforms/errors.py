"""Exception hierarchy.

Two branches matter to callers:

- ``InputError``: the question was malformed (bad polynomial, not a good BONG,
  wrong parity for the chosen method...). The CLI exits with status 2.
- ``InternalFault``: an invariant the library relies on did not hold. This
  always indicates an arithmetic bug and the CLI exits with status 1.
"""

from __future__ import annotations


class DyadicFormsError(Exception):
    """Base class for every error raised by dyadicforms."""


class InputError(DyadicFormsError):
    """The request cannot be answered as posed."""


class InternalFault(DyadicFormsError):
    """A self-check failed."""


# =============================================================================
# Field arithmetic
# =============================================================================


class NonEisenstein(InputError):
    """The supplied ramified polynomial is not Eisenstein."""


class ReducibleUnramifiedPoly(InputError):
    """The supplied residue polynomial is not irreducible over GF(2)."""


class FieldMismatch(InputError):
    """Operands belong to different field contexts."""


class PrecisionLoss(InputError):
    """The answer depends on digits beyond the tracked precision."""


class DivisionByZero(InputError):
    """Inverse or quotient of an exact zero."""


class DefectOutOfRange(InputError):
    """defect_split needs 1 <= d(delta) < 2e."""


class SharpUndefined(InputError):
    """c is a square or Delta times a square."""


# =============================================================================
# Spaces and lattices
# =============================================================================


class UndefinedSpace(InputError):
    """W_2^2(1) does not exist."""


class NotAGoodBong(InputError):
    """A sequence violates one of the good-BONG inequalities.

    Attributes:
        index: 1-based index i of the violated inequality
        which: "R_i <= R_{i+2}", "R_{i+1}-R_i+d(-a_i a_{i+1}) >= 0" or "R_{i+1}-R_i >= -2e"
    """

    def __init__(self, index: int, which: str, detail: str = ""):
        self.index = index
        self.which = which
        message = f"not a good BONG: {which} fails at i={index}"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)


class RejectedBong(InputError):
    """``check_bong`` found errors in a literal BONG.

    Attributes:
        codes: error codes in the order they were reported
    """

    def __init__(self, codes: list[str]):
        self.codes = list(codes)
        super().__init__(f"not a good BONG: {', '.join(self.codes)}")


class BadParams(InputError):
    """Block parameters do not fit the block kind."""


class RankError(InputError):
    """Rank of the represented lattice exceeds the rank of the target."""


class NotIntegral(InputError):
    """A lattice with R_1 < 0 was passed where integrality is required."""


class ParityMismatch(InputError):
    """An even-only (odd-only) method was asked about odd (even) n."""


# =============================================================================
# Internal faults
# =============================================================================


class AlphaInconsistency(InternalFault):
    """The two formulas for alpha_i disagree."""


class ClassTableError(InternalFault):
    """Square-class table or norm-group construction failed a self-check."""
