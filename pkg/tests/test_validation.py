"""
Unit tests for check_bong(), the collect-everything BONG validator.
"""

import pytest

from dyadicforms.errors import NotAGoodBong
from dyadicforms.field import FieldElement
from dyadicforms.lattice import Severity, ValidationResult, check_bong, hyperbolic_lattice, validate_bong


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

def _codes(result):
    """Extract code strings from a ValidationResult."""
    return [m.code for m in result.messages]


def _accepted(a):
    try:
        validate_bong(a)
    except NotAGoodBong:
        return False
    return True


class TestValidBongs:

    def test_h2_clean(self, h2_q2):
        result = check_bong(h2_q2.a)
        assert isinstance(result, ValidationResult)
        assert result.valid
        assert result.messages == []

    def test_ramified_h3_clean(self, ramified):
        assert check_bong(hyperbolic_lattice(ramified, 3).a).valid


class TestInequalityFindings:

    def test_every_violation_reported(self, q2):
        result = check_bong([q2.pi ** 2, q2.pi ** 2, q2.one])
        assert not result.valid
        assert _codes(result) == ["BONG_GOOD_ORDER", "BONG_DEFECT_STEP"]
        assert all(m.severity == Severity.ERROR for m in result.messages)

    def test_min_step(self, q2):
        result = check_bong([q2.one, -q2.pi ** -4])
        assert _codes(result) == ["BONG_MIN_STEP"]
        assert result.errors[0].suggestion

    def test_messages_name_the_index(self, q2):
        result = check_bong([q2.one, q2.pi ** -1])
        assert "i=1" in result.errors[0].message

    @pytest.mark.parametrize("exponents", [
        (0, 0),
        (0, -2),
        (2, 2, 0),
        (0, -1),
        (1, 3, 1),
        (0, 5, 0, 7),
    ])
    def test_agrees_with_validate_bong(self, q2, exponents):
        a = [q2.from_int(3) * q2.pi ** k for k in exponents]
        assert check_bong(a).valid == _accepted(a)


class TestEntryFindings:

    def test_empty(self):
        result = check_bong([])
        assert _codes(result) == ["BONG_EMPTY"]
        assert not result.valid

    def test_zero_entry(self, q2):
        result = check_bong([q2.one, q2.zero])
        assert _codes(result) == ["BONG_ZERO_ENTRY"]

    def test_low_precision(self, q2):
        short = FieldElement(q2, 0, q2.one.unit, 2)
        result = check_bong([short])
        assert _codes(result) == ["ENTRY_PRECISION"]
        assert "--prec" in result.errors[0].suggestion


class TestIntegrality:

    def test_non_integral_is_a_warning(self, q2):
        result = check_bong([q2.pi ** -1])
        assert result.valid
        assert _codes(result) == ["LATTICE_NOT_INTEGRAL"]
        assert result.warnings and not result.errors

    def test_integral_has_no_warning(self, q2):
        assert check_bong([q2.pi]).warnings == []
