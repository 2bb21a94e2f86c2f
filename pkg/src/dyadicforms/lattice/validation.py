"""
Lattice input validation.

``validate_bong`` stops at the first violated inequality; ``check_bong``
collects every finding so a user editing a lattice file sees all of them at
once. Findings carry a stable code and, where one exists, a suggestion.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Sequence

from ..errors import PrecisionLoss
from ..field import FieldElement
from .bong import DEFECT_STEP, GOOD_ORDER, MIN_STEP, bong_violations

__all__ = ["Severity", "ValidationMessage", "ValidationResult", "check_bong"]


class Severity(Enum):
    """Validation message severity"""
    INFO = "info"
    WARNING = "warning"
    ERROR = "error"


@dataclass
class ValidationMessage:
    """A single validation finding"""
    severity: Severity
    code: str
    message: str
    suggestion: Optional[str] = None


@dataclass
class ValidationResult:
    """Complete validation result"""
    valid: bool  # True if no errors
    messages: List[ValidationMessage] = field(default_factory=list)

    @property
    def errors(self) -> List[ValidationMessage]:
        return [m for m in self.messages if m.severity == Severity.ERROR]

    @property
    def warnings(self) -> List[ValidationMessage]:
        return [m for m in self.messages if m.severity == Severity.WARNING]

    @property
    def infos(self) -> List[ValidationMessage]:
        return [m for m in self.messages if m.severity == Severity.INFO]


_CODES = {
    GOOD_ORDER: ("BONG_GOOD_ORDER", "Reorder so that ord a_i <= ord a_{i+2}"),
    DEFECT_STEP: ("BONG_DEFECT_STEP", "The pair a_i, a_{i+1} cannot be consecutive norm generators"),
    MIN_STEP: ("BONG_MIN_STEP", "ord a_{i+1} may drop below ord a_i by at most 2e"),
}


def _check_entries(a: Sequence[FieldElement]) -> List[ValidationMessage]:
    messages = []
    if not a:
        messages.append(ValidationMessage(
            severity=Severity.ERROR,
            code="BONG_EMPTY",
            message="A BONG needs at least one entry",
        ))
        return messages
    need = 2 * a[0].ctx.e + 1
    for i, x in enumerate(a, start=1):
        if x.is_zero:
            messages.append(ValidationMessage(
                severity=Severity.ERROR,
                code="BONG_ZERO_ENTRY",
                message=f"a_{i} is zero",
            ))
        elif x.rel_prec < need:
            messages.append(ValidationMessage(
                severity=Severity.ERROR,
                code="ENTRY_PRECISION",
                message=f"a_{i} carries {x.rel_prec} digits, square classes need {need}",
                suggestion="Supply more digits or raise --prec",
            ))
    return messages


def _check_inequalities(a: Sequence[FieldElement]) -> List[ValidationMessage]:
    messages = []
    try:
        found = bong_violations(a)
    except PrecisionLoss as exc:
        return [ValidationMessage(severity=Severity.ERROR, code="ENTRY_PRECISION", message=str(exc))]
    for v in found:
        code, suggestion = _CODES[v.which]
        messages.append(ValidationMessage(
            severity=Severity.ERROR,
            code=code,
            message=f"{v.which} fails at i={v.index}: {v.detail}",
            suggestion=suggestion,
        ))
    return messages


def _check_integrality(a: Sequence[FieldElement]) -> List[ValidationMessage]:
    if a[0].val >= 0:
        return []
    return [ValidationMessage(
        severity=Severity.WARNING,
        code="LATTICE_NOT_INTEGRAL",
        message=f"R_1 = {int(a[0].val)} < 0: the lattice is not integral",
        suggestion="Representation and universality questions are refused for non-integral lattices",
    )]


def check_bong(a: Sequence[FieldElement]) -> ValidationResult:
    """
    Check a candidate good BONG and report every problem found.

    Args:
        a: Candidate entries a_1, ..., a_m

    Returns:
        ValidationResult; valid iff ``validate_bong`` would accept the sequence
    """
    messages = _check_entries(a)
    if not messages:
        messages.extend(_check_inequalities(a))
        messages.extend(_check_integrality(a))

    has_errors = any(m.severity == Severity.ERROR for m in messages)
    return ValidationResult(valid=not has_errors, messages=messages)
