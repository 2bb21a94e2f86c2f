"""
Tests for good-BONG validation and the R, alpha, d[.] and A invariants.
"""

import math
from fractions import Fraction

import pytest

from dyadicforms.errors import FieldMismatch, NotAGoodBong, NotIntegral
from dyadicforms.forms import hyperbolic_space, is_isometric
from dyadicforms.lattice import (
    alpha,
    big_a,
    bong_violations,
    concat,
    d_bracket,
    d_bracket_pair,
    hyperbolic_lattice,
    space_of,
    validate_bong,
)
from dyadicforms.lattice.bong import DEFECT_STEP, GOOD_ORDER, MIN_STEP

from tests.helpers.lattices import block, bong


class TestValidateBong:
    """The three good-BONG inequalities."""

    def test_hyperbolic_pair(self, q2):
        lat = bong(q2, 1, (-1, -2))
        assert lat.R == (0, -2)
        assert lat.alpha == (Fraction(0),)

    def test_good_order_violation(self, q2):
        a = [q2.pi ** 2, q2.pi ** 2, q2.one]
        with pytest.raises(NotAGoodBong) as exc_info:
            validate_bong(a)
        assert exc_info.value.index == 1
        assert exc_info.value.which == GOOD_ORDER

    def test_all_violations_listed(self, q2):
        a = [q2.pi ** 2, q2.pi ** 2, q2.one]
        found = [(v.index, v.which) for v in bong_violations(a)]
        assert found == [(1, GOOD_ORDER), (2, DEFECT_STEP)]

    def test_min_step_alone(self, q2):
        # -a_1 a_2 is a square, so only the -2e bound fails
        a = [q2.one, -q2.pi ** -4]
        found = [(v.index, v.which) for v in bong_violations(a)]
        assert found == [(1, MIN_STEP)]

    def test_odd_drop_fails_defect_step(self, q2):
        a = [q2.one, q2.pi ** -1]
        with pytest.raises(NotAGoodBong) as exc_info:
            validate_bong(a)
        assert exc_info.value.which == DEFECT_STEP

    def test_empty(self):
        with pytest.raises(NotAGoodBong):
            validate_bong([])

    def test_zero_entry(self, q2):
        with pytest.raises(NotAGoodBong):
            validate_bong([q2.one, q2.zero])

    def test_mixed_fields(self, q2, ramified):
        with pytest.raises(FieldMismatch):
            validate_bong([q2.one, ramified.one])

    def test_error_message_names_index(self, q2):
        with pytest.raises(NotAGoodBong, match="i=1"):
            validate_bong([q2.pi ** 2, q2.pi ** 2, q2.one])


class TestAlpha:
    """alpha_i on small examples with known values."""

    @pytest.mark.parametrize("entries,expected", [
        ((1, 1), Fraction(1)),           # d(-1) = 1
        ((1, 3), Fraction(1)),           # min(1, 0 + d(-3)) = 1
        ((1, 2), Fraction(1)),           # odd step: alpha = R_2 - R_1
        ((1, 8), Fraction(5, 2)),        # step 3 > 2e: (R_2 - R_1)/2 + e
        ((1, 4), Fraction(2)),           # step 2e gives 2e
    ])
    def test_binary_q2(self, q2, entries, expected):
        assert bong(q2, *entries).alpha == (expected,)

    def test_h2(self, any_field):
        e = any_field.e
        lat = hyperbolic_lattice(any_field, 2)
        assert lat.R == (0, -2 * e, 0, -2 * e)
        assert lat.alpha == (0, 2 * e, 0)

    def test_accessor_bounds(self, h2_q2):
        assert alpha(h2_q2, 2) == 2
        assert h2_q2.alpha_at(0) == math.inf
        assert h2_q2.alpha_at(4) == math.inf
        with pytest.raises(IndexError):
            alpha(h2_q2, 4)
        with pytest.raises(IndexError):
            h2_q2.alpha_at(5)

    def test_ramified_half_integer(self, ramified):
        # step 5 > 2e = 4: alpha = 5/2 + 2
        lat = validate_bong([ramified.one, ramified.pi ** 5])
        assert lat.alpha == (Fraction(9, 2),)


class TestBrackets:
    """d[c a_{i,j}], d[c a_{1,i} b_{1,j}] and A_i."""

    def test_d_bracket_caps_by_alpha(self, h2_q2):
        # d(-a_1 a_2) is infinite; alpha_2 = 2 caps it
        assert d_bracket(h2_q2, -1, 1, 2) == 2
        # alpha_0 and alpha_4 are ignored
        assert d_bracket(h2_q2, 1, 1, 4) == math.inf

    def test_d_bracket_pair_empty_products(self, h2_q2):
        # c = 1 with both products empty: d(1) = inf, both alphas ignored
        assert d_bracket_pair(h2_q2, h2_q2, 1, 0, 0) == math.inf

    def test_d_bracket_pair_fields(self, h2_q2, ramified):
        other = hyperbolic_lattice(ramified, 1)
        with pytest.raises(FieldMismatch):
            d_bracket_pair(h2_q2, other, 1, 1, 1)

    def test_big_a_first_index(self, h2_q2):
        # A_1 = min((R_2 - S_1)/2 + e, R_2 - S_1 + d[-a_{1,2}]) = min(0, ...)
        assert big_a(h2_q2, h2_q2, 1) <= 0

    def test_big_a_range(self, h2_q2):
        with pytest.raises(IndexError):
            big_a(h2_q2, h2_q2, 4)


class TestLatticeObject:
    """BongLattice helpers."""

    def test_rank_and_integrality(self, h2_q2, q2):
        assert h2_q2.rank == 4
        assert h2_q2.is_integral
        lat = validate_bong([q2.pi ** -1])
        assert not lat.is_integral
        with pytest.raises(NotIntegral):
            lat.require_integral()

    def test_r_is_one_based(self, h2_q2):
        assert h2_q2.r(1) == 0
        assert h2_q2.r(2) == -2
        with pytest.raises(IndexError):
            h2_q2.r(0)

    def test_space(self, any_field):
        lat = hyperbolic_lattice(any_field, 2)
        assert is_isometric(space_of(lat), hyperbolic_space(any_field, 2))
        assert lat.prefix_space(0).dim == 0
        assert is_isometric(lat.prefix_space(2), hyperbolic_space(any_field))

    def test_product_coords(self, h2_q2):
        assert h2_q2.product_coords(1, 0) == 0
        assert h2_q2.product_coords(1, 4) == 0  # det H^2 is a square

    def test_concat_label(self, q2):
        lat = concat(block(q2, "H"), block(q2, "H"), block(q2, "A22rho"))
        assert lat.label == "H^2 ⊥ 2^{-1}A(2,2ρ)"
        assert lat.R == (0, -2, 0, -2, 0, -2)

    def test_concat_revalidates(self, q2):
        with pytest.raises(NotAGoodBong):
            concat(block(q2, "unary", a=q2.pi ** 2), block(q2, "H"))

    def test_invariants_do_not_depend_on_bong(self, any_field):
        # ≺u, -u π^{-2e}≻ is another good BONG of H for any unit u
        u = any_field.from_int(3)
        h = block(any_field, "H")
        other = validate_bong([u, -u * any_field.pi ** (-2 * any_field.e)])
        assert other.R == h.R
        assert alpha(other, 1) == alpha(h, 1)
        assert is_isometric(space_of(other), space_of(h))
        assert concat(other, h).R == hyperbolic_lattice(any_field, 2).R

    def test_str(self, q2):
        assert str(bong(q2, 1)).startswith("≺")
