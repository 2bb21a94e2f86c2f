"""
Exact arithmetic in dyadic local fields.

Pure Python; no dependency on the lattice or CLI layers.
"""

from .classes import (
    ClassTable,
    SquareClass,
    all_square_classes,
    as_class,
    class_of_coords,
    class_product,
    class_table,
    square_class_of,
    unit_class_reps,
)
from .context import FieldContext, make_field
from .defect import defect_descent, defect_order, defect_split, is_square, sharp
from .element import FieldElement
from .residue import ResidueField

__all__ = [
    # Fields and elements
    "FieldContext",
    "FieldElement",
    "ResidueField",
    "make_field",
    # Quadratic defect
    "defect_descent",
    "defect_order",
    "defect_split",
    "is_square",
    "sharp",
    # Square classes
    "ClassTable",
    "SquareClass",
    "all_square_classes",
    "as_class",
    "class_of_coords",
    "class_product",
    "class_table",
    "square_class_of",
    "unit_class_reps",
]
