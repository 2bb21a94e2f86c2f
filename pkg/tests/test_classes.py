"""
Tests for the square-class table F^x / F^x2.
"""

import math

import pytest

from dyadicforms.field import (
    all_square_classes,
    as_class,
    class_of_coords,
    class_table,
    square_class_of,
    unit_class_reps,
)


class TestClassCounts:
    """2^{ef+2} classes, half of them units."""

    @pytest.mark.parametrize("name,total,units", [
        ("q2", 8, 4),
        ("ramified", 16, 8),
        ("unramified", 16, 8),
    ])
    def test_counts(self, request, name, total, units):
        ctx = request.getfixturevalue(name)
        assert len(all_square_classes(ctx)) == total
        assert len(unit_class_reps(ctx)) == units

    def test_units_come_first(self, any_field):
        classes = all_square_classes(any_field)
        half = len(classes) // 2
        assert all(c.parity == 0 for c in classes[:half])
        assert all(c.parity == 1 for c in classes[half:])

    def test_indices_are_positions(self, any_field):
        for i, c in enumerate(all_square_classes(any_field)):
            assert c.index == i

    def test_coords_are_distinct(self, any_field):
        coords = {c.coords for c in all_square_classes(any_field)}
        assert len(coords) == len(all_square_classes(any_field))

    def test_unit_reps_sorted_by_defect(self, any_field):
        defects = [c.dval for c in unit_class_reps(any_field)]
        assert defects == sorted(defects)
        assert defects[-1] == math.inf


class TestClassOf:
    """square_class_of() and the group law."""

    def test_representatives_are_canonical(self, any_field):
        for c in all_square_classes(any_field):
            assert square_class_of(c.rep) == c

    def test_product_matches_element_product(self, any_field):
        classes = all_square_classes(any_field)
        for a in classes:
            for b in classes:
                assert square_class_of(a.rep * b.rep) == a * b

    def test_coords_xor(self, any_field):
        classes = all_square_classes(any_field)
        for a in classes:
            for b in classes:
                assert class_of_coords(any_field, a.coords ^ b.coords) == a * b

    def test_every_class_has_order_two(self, any_field):
        table = class_table(any_field)
        for c in all_square_classes(any_field):
            assert c * c == table.one

    def test_squares_fall_in_class_one(self, q2, classes_q2):
        assert square_class_of(q2.from_int(17)) == classes_q2.one
        assert square_class_of(q2.from_rational(4, 9)) == classes_q2.one

    def test_q2_units(self, q2, classes_q2):
        seen = {square_class_of(q2.from_int(u)).index for u in (1, 3, 5, 7)}
        assert len(seen) == 4
        assert square_class_of(q2.from_int(-1)) == classes_q2.minus_one
        assert square_class_of(q2.from_int(12)) == square_class_of(q2.from_int(3))

    def test_named_classes(self, any_field):
        table = class_table(any_field)
        assert table.one.is_square
        assert table.delta.dval == 2 * any_field.e
        assert table.pi.parity == 1
        assert table.minus_one == square_class_of(-any_field.one)

    def test_as_class_accepts_ints_and_classes(self, q2, classes_q2):
        assert as_class(5, q2) == square_class_of(q2.from_int(5))
        assert as_class(classes_q2.delta, q2) is classes_q2.delta

    def test_classes_of_different_fields_differ(self, ramified, unramified):
        a = class_table(ramified).one
        b = class_table(unramified).one
        assert a != b
