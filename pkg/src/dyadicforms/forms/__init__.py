"""
Quadratic spaces: Hilbert symbol, isometry invariants and representation.
"""

from .hilbert import PairingMatrix, hilbert, hilbert_classes, norm_group, pairing_matrix
from .spaces import (
    SpaceInv,
    empty_space,
    hasse,
    hyperbolic_space,
    is_isometric,
    is_isotropic,
    orthogonal_sum,
    represented_w_index,
    space_is_n_universal,
    space_of_diagonal,
    space_represents,
    w_space,
)

__all__ = [
    # Hilbert symbol
    "PairingMatrix",
    "hilbert",
    "hilbert_classes",
    "norm_group",
    "pairing_matrix",
    # Spaces
    "SpaceInv",
    "empty_space",
    "hasse",
    "hyperbolic_space",
    "is_isometric",
    "is_isotropic",
    "orthogonal_sum",
    "represented_w_index",
    "space_is_n_universal",
    "space_of_diagonal",
    "space_represents",
    "w_space",
]
