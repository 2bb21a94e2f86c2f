"""
Tests for the Hilbert symbol.
"""

import pytest
from hypothesis import given, settings, strategies

from dyadicforms.field import all_square_classes, class_table
from dyadicforms.forms import hilbert, hilbert_classes, norm_group, pairing_matrix

Q2_REPS = [1, 3, 5, 7, 2, 6, 10, 14]

nonzero = strategies.integers(-10**6, 10**6).filter(lambda x: x != 0)


def _q2_closed_form(a: int, b: int) -> int:
    """(a, b)_2 from the classical formula in epsilon and omega."""

    def split(x):
        k = 0
        while x % 2 == 0:
            x //= 2
            k += 1
        return k, x

    def eps(u):
        return ((u - 1) // 2) % 2

    def omega(u):
        return ((u * u - 1) // 8) % 2

    alpha, u = split(a)
    beta, v = split(b)
    exponent = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u)
    return -1 if exponent % 2 else 1


class TestHilbertQ2:
    """Agreement with the closed form over Q_2."""

    @pytest.mark.parametrize("a", Q2_REPS)
    def test_closed_form(self, q2, a):
        for b in Q2_REPS:
            assert hilbert(q2.from_int(a), q2.from_int(b)) == _q2_closed_form(a, b), f"({a}, {b})"

    def test_negative_entries(self, q2):
        assert hilbert(q2.from_int(-1), q2.from_int(-1)) == -1
        assert hilbert(q2.from_int(2), q2.from_int(-1)) == 1
        assert hilbert(q2.from_int(-3), q2.from_int(2)) == -1


class TestHilbertProperties:
    """Symmetry, bimultiplicativity and non-degeneracy in every field."""

    def test_symmetric(self, any_field):
        classes = all_square_classes(any_field)
        for a in classes:
            for b in classes:
                assert hilbert(a, b) == hilbert(b, a)

    def test_bimultiplicative(self, any_field):
        classes = all_square_classes(any_field)
        for a in classes:
            for b in classes:
                for c in classes:
                    assert hilbert(a, b * c) == hilbert(a, b) * hilbert(a, c)

    def test_a_minus_a(self, any_field):
        minus_one = class_table(any_field).minus_one
        for a in all_square_classes(any_field):
            assert hilbert(a, a * minus_one) == 1

    def test_squares_pair_trivially(self, any_field):
        one = class_table(any_field).one
        for a in all_square_classes(any_field):
            assert hilbert(a, one) == 1

    def test_non_degenerate(self, any_field):
        classes = all_square_classes(any_field)
        for a in classes:
            if a.is_square:
                continue
            assert any(hilbert(a, b) == -1 for b in classes), a.label

    def test_delta_pairs_by_parity(self, any_field):
        table = class_table(any_field)
        for c in all_square_classes(any_field):
            expected = -1 if c.parity else 1
            assert hilbert(table.delta, c) == expected

    def test_defect_shortcut(self, any_field):
        e = any_field.e
        classes = all_square_classes(any_field)
        for a in classes:
            for b in classes:
                if a.dval + b.dval > 2 * e:
                    assert hilbert_classes(a, b) == 1


class TestNormGroups:
    """Norm groups N(F(sqrt c)) as subgroups of the class group."""

    def test_index_two(self, any_field):
        total = len(all_square_classes(any_field))
        for c in all_square_classes(any_field):
            if c.is_square:
                continue
            assert len(norm_group(any_field, c)) == total // 2

    def test_symbol_is_norm_group_membership(self, any_field):
        classes = all_square_classes(any_field)
        for c in classes:
            norms = norm_group(any_field, c)
            for b in classes:
                assert (hilbert_classes(c, b) == 1) == (b.coords in norms), (c.label, b.label)

    def test_pairing_has_full_rank(self, any_field):
        matrix = pairing_matrix(any_field)
        assert matrix.rank() == any_field.e * any_field.f + 2


class TestHilbertRandomIntegers:
    """Hilbert laws on random rational integers in Q_2."""

    @settings(max_examples=200, deadline=None)
    @given(nonzero, nonzero)
    def test_closed_form(self, q2, a, b):
        assert hilbert(q2.from_int(a), q2.from_int(b)) == _q2_closed_form(a, b)

    @settings(max_examples=100, deadline=None)
    @given(nonzero, nonzero, nonzero)
    def test_bimultiplicative(self, q2, a, b, c):
        x, y, z = q2.from_int(a), q2.from_int(b), q2.from_int(c)
        assert hilbert(x, y * z) == hilbert(x, y) * hilbert(x, z)

    @settings(max_examples=100, deadline=None)
    @given(nonzero.filter(lambda x: x != 1))
    def test_steinberg(self, q2, a):
        assert hilbert(q2.from_int(a), q2.from_int(1 - a)) == 1
        assert hilbert(q2.from_int(a), q2.from_int(-a)) == 1
