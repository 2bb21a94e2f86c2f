"""
Tests for field construction and element arithmetic.
"""

import pytest

from dyadicforms.errors import (
    DivisionByZero,
    FieldMismatch,
    NonEisenstein,
    PrecisionLoss,
    ReducibleUnramifiedPoly,
)
from dyadicforms.field import FieldElement, defect_order, make_field


class TestMakeField:
    """make_field() parameter handling."""

    def test_defaults(self, q2):
        assert q2.e == 1
        assert q2.f == 1
        assert q2.degree == 1
        assert q2.default_prec == 18

    def test_ramified_precision_scales_with_e(self, ramified):
        assert ramified.default_prec == 6 * 2 + 12

    def test_explicit_precision(self):
        ctx = make_field(1, 1, prec=10)
        assert ctx.default_prec == 10

    def test_precision_below_defect_requirement_rejected(self):
        with pytest.raises(ValueError, match="2e\\+2"):
            make_field(2, 1, prec=5)

    @pytest.mark.parametrize("e,f", [(0, 1), (1, 0), (-1, 2)])
    def test_non_positive_degrees_rejected(self, e, f):
        with pytest.raises(ValueError):
            make_field(e, f)

    def test_reducible_residue_polynomial_rejected(self):
        # 1 + x^2 = (1 + x)^2 over GF(2)
        with pytest.raises(ReducibleUnramifiedPoly):
            make_field(1, 2, unram_poly=[1, 0, 1])

    def test_explicit_irreducible_polynomial_accepted(self):
        ctx = make_field(1, 2, unram_poly=[1, 1, 1])
        assert ctx.unram_poly == [1, 1, 1]

    def test_eisenstein_with_unit_constant_rejected(self):
        with pytest.raises(NonEisenstein):
            make_field(2, 1, eis_poly=[[1], [0], [1]])

    def test_eisenstein_with_unit_middle_coefficient_rejected(self):
        with pytest.raises(NonEisenstein):
            make_field(2, 1, eis_poly=[[2], [1], [1]])

    def test_eisenstein_wrong_length_rejected(self):
        with pytest.raises(NonEisenstein):
            make_field(2, 1, eis_poly=[[2], [1]])

    def test_alternative_eisenstein_polynomial(self):
        # x^2 + 2x + 2 is Eisenstein
        ctx = make_field(2, 1, eis_poly=[[2], [2], [1]])
        assert ctx.from_int(2).val == 2
        assert defect_order(ctx.delta) == 4


class TestElements:
    """Valuations and basic arithmetic."""

    def test_valuation_of_integers(self, q2, ramified):
        assert q2.from_int(12).val == 2
        assert ramified.from_int(12).val == 4
        assert ramified.pi.val == 1

    def test_units(self, q2):
        assert q2.from_int(7).is_unit()
        assert not q2.from_int(6).is_unit()
        assert q2.from_int(6).unit_part() == q2.from_int(3)

    def test_parity(self, ramified):
        assert ramified.pi.parity == 1
        assert ramified.from_int(2).parity == 0

    def test_zero_has_no_parity(self, q2):
        with pytest.raises(DivisionByZero):
            q2.zero.parity

    def test_ring_identities(self, any_field):
        x = any_field.from_int(5)
        y = any_field.from_rational(3, 7)
        assert x * y == y * x
        assert (x + y) * x == x * x + y * x
        assert (x / y) * y == x

    def test_rational_inverse(self, q2):
        third = q2.from_rational(1, 3)
        assert third * 3 == 1

    def test_negative_powers(self, ramified):
        assert ramified.pi ** -3 * ramified.pi ** 3 == 1
        assert (ramified.pi ** -3).val == -3

    def test_shift(self, q2):
        assert q2.from_int(3).shift(2) == q2.from_int(12)

    def test_zero_inverse(self, q2):
        with pytest.raises(DivisionByZero):
            q2.zero.inverse()

    def test_full_cancellation_loses_precision(self, q2):
        x = q2.from_int(5)
        with pytest.raises(PrecisionLoss):
            x - x

    def test_mixed_fields_rejected(self, q2, ramified):
        with pytest.raises(FieldMismatch):
            q2.one + ramified.one

    def test_equality_with_ints(self, q2):
        assert q2.from_int(-1) == -1
        assert q2.from_int(3) != 7

    def test_unhashable(self, q2):
        with pytest.raises(TypeError):
            hash(q2.one)


class TestDigits:
    """Digit literals used by the JSON layer."""

    def test_from_digits(self, q2):
        # 1 + 2 = 3
        assert q2.from_digits(0, [1, 1]) == q2.from_int(3)

    def test_leading_zero_digits_shift_valuation(self, q2):
        x = q2.from_digits(0, [0, 0, 1])
        assert x.val == 2
        assert x == 4

    def test_all_zero_digits_is_zero(self, q2):
        assert q2.from_digits(3, [0, 0]).is_zero

    def test_digit_out_of_range(self, q2, unramified):
        with pytest.raises(ValueError):
            q2.from_digits(0, [2])
        # residue field of order 4 accepts digit 3
        assert unramified.from_digits(0, [3]).is_unit()

    def test_literal_reparses(self, any_field):
        x = any_field.from_rational(-5, 3) * any_field.pi
        again = any_field.from_literal(x.to_literal())
        assert isinstance(again, FieldElement)
        assert again == x

    def test_literal_shape(self, q2):
        literal = q2.from_int(6).to_literal()
        assert literal["val"] == 1
        assert literal["digits"][:2] == [1, 1]


class TestConstants:
    """pi, rho and Delta fixed by the context."""

    def test_delta_has_defect_2e(self, any_field):
        assert defect_order(any_field.delta) == 2 * any_field.e

    def test_delta_is_one_minus_four_rho(self, any_field):
        assert any_field.delta == 1 - 4 * any_field.rho

    def test_rho_is_unit(self, any_field):
        assert any_field.rho.is_unit()
