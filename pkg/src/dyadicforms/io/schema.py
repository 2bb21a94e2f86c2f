"""
Report payloads emitted by the CLI.

Every top-level payload carries ``schema_version`` and the Hasse convention
so that stored results stay interpretable when either changes.
"""

from __future__ import annotations

from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field

from ..constants import HASSE_CONVENTION, SCHEMA_VERSION
from .loaders import ElementLiteral

__all__ = [
    "SCHEMA_VERSION",
    "Payload",
    "FieldSummary",
    "SpaceReport",
    "MessageReport",
    "LatticeReport",
    "InvariantsReport",
    "RepresentationReport",
    "UniversalityReport",
    "TestingSetEntryReport",
    "TestingSetReport",
    "DisagreementReport",
    "CrosscheckPayload",
    "MinimalityReport",
    "ClassReport",
    "ClassesReport",
    "DefectReport",
    "HilbertReport",
    "SharpReport",
]


class FieldSummary(BaseModel):
    """The field a result was computed in."""
    e: int
    f: int
    unram_poly: list[int]
    eis_poly: list[list[int]]
    prec: int
    rho: ElementLiteral
    delta: ElementLiteral


class Payload(BaseModel):
    """Common header of every CLI result."""
    model_config = ConfigDict(extra='ignore')

    schema_version: str = SCHEMA_VERSION
    hasse_convention: str = HASSE_CONVENTION
    field: FieldSummary


class SpaceReport(BaseModel):
    dim: int
    det: ElementLiteral
    hasse: int


class MessageReport(BaseModel):
    severity: str
    code: str
    message: str
    suggestion: Optional[str] = None


class LatticeReport(BaseModel):
    """A lattice; ``bong`` re-parses to the same lattice."""
    bong: list[ElementLiteral]
    jordan: str = ""
    R: list[int]
    alpha: list[str] = Field(description="alpha_1 .. alpha_{m-1} as exact fractions")
    space: SpaceReport


class InvariantsReport(Payload):
    lattice: Optional[LatticeReport] = None
    messages: list[MessageReport] = Field(default_factory=list)


class RepresentationReport(Payload):
    represented: bool
    witness: Optional[dict[str, Any]] = None
    detail: str = ""


class UniversalityReport(Payload):
    universal: bool
    n: int
    method: str
    witness: Optional[str] = None


class TestingSetEntryReport(BaseModel):
    nu: int
    c: ElementLiteral
    jordan: str
    bong: list[ElementLiteral]
    R: list[int]


class TestingSetReport(Payload):
    n: int
    count: int
    entries: list[TestingSetEntryReport]


class DisagreementReport(BaseModel):
    sample: int
    lattice: LatticeReport
    verdicts: dict[str, bool]
    witnesses: dict[str, Optional[str]]


class CrosscheckPayload(Payload):
    n: int
    seed: int
    count: int
    methods: list[str]
    universal: int
    not_universal: int
    disagreements: list[DisagreementReport]


class MinimalityReport(Payload):
    n: int
    minimal: bool
    size: int
    mismatches: list[dict[str, Any]] = Field(default_factory=list)


class ClassReport(BaseModel):
    index: int
    rep: ElementLiteral
    parity: int
    d: Optional[int] = Field(default=None, description="None for the square class (d = infinity)")


class ClassesReport(Payload):
    count: int
    unit_count: int
    classes: list[ClassReport]


class DefectReport(Payload):
    element: ElementLiteral
    d: Optional[int] = Field(default=None, description="None when the element is a square")
    is_square: bool


class HilbertReport(Payload):
    a: ElementLiteral
    b: ElementLiteral
    symbol: int


class SharpReport(Payload):
    c: ElementLiteral
    sharp: ElementLiteral
    d_c: int
    d_sharp: int
