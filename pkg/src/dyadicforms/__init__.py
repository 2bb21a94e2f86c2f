"""
dyadicforms - exact n-universality decisions for integral quadratic lattices
over dyadic local fields.

Example:
    >>> from dyadicforms import make_field, hyperbolic_lattice, is_n_universal, testing_set
    >>> ctx = make_field(e=1, f=1)                      # Q_2
    >>> h2 = hyperbolic_lattice(ctx, 2)                 # H ⊥ H
    >>> is_n_universal(h2, 2).universal
    True
    >>> len(testing_set(ctx, 2))
    15

Note: All imports are lazy-loaded. The arithmetic layer can be imported
without pulling in the IO layer (Pydantic) or the CLI (click).
"""

__version__ = "0.1.0"

# Define which names come from which submodule

_ENUMS = {"Method", "LatticeKind", "Condition", "OutputFormat"}

_ERRORS = {
    "DyadicFormsError",
    "InputError",
    "InternalFault",
    "NotAGoodBong",
    "RankError",
    "NotIntegral",
    "ParityMismatch",
    "PrecisionLoss",
}

_FIELD = {
    "FieldContext",
    "FieldElement",
    "SquareClass",
    "make_field",
    "defect_order",
    "defect_split",
    "is_square",
    "sharp",
    "square_class_of",
    "unit_class_reps",
    "all_square_classes",
}

_FORMS = {
    "SpaceInv",
    "hilbert",
    "hasse",
    "space_of_diagonal",
    "is_isometric",
    "is_isotropic",
    "space_represents",
    "w_space",
}

_LATTICE = {
    "BongLattice",
    "LatticeDescriptor",
    "validate_bong",
    "check_bong",
    "alpha",
    "d_bracket",
    "d_bracket_pair",
    "big_a",
    "concat",
    "space_of",
    "make_block",
    "hyperbolic_lattice",
    "RepVerdict",
    "represents",
    "essential_indices",
}

_UNIVERSALITY = {
    "UniversalityVerdict",
    "is_n_universal",
    "quaternary_2universal",
    "universal_ranks",
    "TestingSetEntry",
    "testing_set",
    "representation_matrix",
    "minimality_check",
    "sample_lattice",
    "crosscheck",
    "CrosscheckReport",
}

_IO = {"FieldSpec", "LatticeSpec", "load_field_spec", "load_lattice", "parse_element"}

_SUBMODULES = {
    "enums": _ENUMS,
    "errors": _ERRORS,
    "field": _FIELD,
    "forms": _FORMS,
    "lattice": _LATTICE,
    "universality": _UNIVERSALITY,
    "io": _IO,
}

# Cache for lazy-loaded modules
_modules = {}


def __getattr__(name):
    """Lazy load submodules when their attributes are accessed."""
    import importlib

    for module_name, names in _SUBMODULES.items():
        if name in names:
            if module_name not in _modules:
                _modules[module_name] = importlib.import_module(f".{module_name}", __name__)
            return getattr(_modules[module_name], name)

    raise AttributeError(f"module 'dyadicforms' has no attribute {name!r}")


__all__ = [
    # Version
    "__version__",

    # Enums
    "Method",
    "LatticeKind",
    "Condition",
    "OutputFormat",

    # Errors
    "DyadicFormsError",
    "InputError",
    "InternalFault",
    "NotAGoodBong",
    "RankError",
    "NotIntegral",
    "ParityMismatch",
    "PrecisionLoss",

    # Field arithmetic
    "FieldContext",
    "FieldElement",
    "SquareClass",
    "make_field",
    "defect_order",
    "defect_split",
    "is_square",
    "sharp",
    "square_class_of",
    "unit_class_reps",
    "all_square_classes",

    # Quadratic spaces
    "SpaceInv",
    "hilbert",
    "hasse",
    "space_of_diagonal",
    "is_isometric",
    "is_isotropic",
    "space_represents",
    "w_space",

    # Lattices
    "BongLattice",
    "LatticeDescriptor",
    "validate_bong",
    "check_bong",
    "alpha",
    "d_bracket",
    "d_bracket_pair",
    "big_a",
    "concat",
    "space_of",
    "make_block",
    "hyperbolic_lattice",
    "RepVerdict",
    "represents",
    "essential_indices",

    # Universality
    "UniversalityVerdict",
    "is_n_universal",
    "quaternary_2universal",
    "universal_ranks",
    "TestingSetEntry",
    "testing_set",
    "representation_matrix",
    "minimality_check",
    "sample_lattice",
    "crosscheck",
    "CrosscheckReport",

    # IO
    "FieldSpec",
    "LatticeSpec",
    "load_field_spec",
    "load_lattice",
    "parse_element",
]
