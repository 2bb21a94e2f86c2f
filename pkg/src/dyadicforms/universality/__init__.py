"""
n-universality: the deciders, the minimal testing set and cross-validation.
"""

from .criteria import (
    UniversalityVerdict,
    even41,
    even47,
    is_n_universal,
    odd51,
    odd53,
    quaternary_2universal,
    testing_set_check,
    thm11,
    universal_ranks,
)
from .crosscheck import CrosscheckReport, Disagreement, crosscheck, methods_for
from .sampling import boundary_increments, sample_lattice
from .testing_set import (
    RepresentationMatrix,
    TestingSetEntry,
    minimality_check,
    representation_matrix,
    testing_set,
)

__all__ = [
    # Deciders
    "UniversalityVerdict",
    "even41",
    "even47",
    "is_n_universal",
    "odd51",
    "odd53",
    "quaternary_2universal",
    "testing_set_check",
    "thm11",
    "universal_ranks",
    # Testing set
    "RepresentationMatrix",
    "TestingSetEntry",
    "minimality_check",
    "representation_matrix",
    "testing_set",
    # Sampling and cross-validation
    "CrosscheckReport",
    "Disagreement",
    "boundary_increments",
    "crosscheck",
    "methods_for",
    "sample_lattice",
]
