"""
Integral lattices given by good BONGs, and representation between them.
"""

from .blocks import LatticeDescriptor, default_kappa, hyperbolic_lattice, make_block
from .bong import (
    BongLattice,
    BongViolation,
    alpha,
    big_a,
    bong_violations,
    concat,
    d_bracket,
    d_bracket_pair,
    space_of,
    validate_bong,
)
from .representation import RepVerdict, essential_indices, represents
from .validation import Severity, ValidationMessage, ValidationResult, check_bong

__all__ = [
    # BONG invariants
    "BongLattice",
    "BongViolation",
    "alpha",
    "big_a",
    "bong_violations",
    "concat",
    "d_bracket",
    "d_bracket_pair",
    "space_of",
    "validate_bong",
    # Blocks
    "LatticeDescriptor",
    "default_kappa",
    "hyperbolic_lattice",
    "make_block",
    # Validation
    "Severity",
    "ValidationMessage",
    "ValidationResult",
    "check_bong",
    # Representation
    "RepVerdict",
    "essential_indices",
    "represents",
]
