"""
dyadicforms IO - JSON loaders and report payloads.

Example:
    >>> from dyadicforms.io import load_field_spec, load_lattice
    >>> ctx = load_field_spec('{"e": 1, "f": 1}').to_context()
    >>> lattice = load_lattice('{"kind": "concat", "blocks": [{"kind": "H"}, {"kind": "H"}]}', ctx)
    >>> lattice.R
    (0, -2, 0, -2)
"""

from .loaders import (
    CliConfig,
    ElementInput,
    ElementLiteral,
    FieldSpec,
    LatticeSpec,
    load_field_spec,
    load_lattice,
    load_lattice_spec,
    parse_element,
)
from .schema import (
    SCHEMA_VERSION,
    ClassesReport,
    ClassReport,
    CrosscheckPayload,
    DefectReport,
    DisagreementReport,
    FieldSummary,
    HilbertReport,
    InvariantsReport,
    LatticeReport,
    MessageReport,
    MinimalityReport,
    Payload,
    RepresentationReport,
    SharpReport,
    SpaceReport,
    TestingSetEntryReport,
    TestingSetReport,
    UniversalityReport,
)

__all__ = [
    # Loaders
    "CliConfig",
    "ElementInput",
    "ElementLiteral",
    "FieldSpec",
    "LatticeSpec",
    "load_field_spec",
    "load_lattice",
    "load_lattice_spec",
    "parse_element",
    # Payloads
    "SCHEMA_VERSION",
    "ClassesReport",
    "ClassReport",
    "CrosscheckPayload",
    "DefectReport",
    "DisagreementReport",
    "FieldSummary",
    "HilbertReport",
    "InvariantsReport",
    "LatticeReport",
    "MessageReport",
    "MinimalityReport",
    "Payload",
    "RepresentationReport",
    "SharpReport",
    "SpaceReport",
    "TestingSetEntryReport",
    "TestingSetReport",
    "UniversalityReport",
]
