"""
Tests for the seeded lattice sampler.
"""

import pytest

from dyadicforms.errors import BadParams
from dyadicforms.lattice import bong_violations
from dyadicforms.universality import boundary_increments, sample_lattice


class TestSampleLattice:

    def test_deterministic(self, any_field):
        first = sample_lattice(any_field, 6, 2 * any_field.e + 2, 11)
        second = sample_lattice(any_field, 6, 2 * any_field.e + 2, 11)
        assert first.R == second.R
        assert all(x == y for x, y in zip(first.a, second.a))

    def test_seeds_differ(self, q2):
        shapes = {sample_lattice(q2, 6, 4, seed).R for seed in range(20)}
        assert len(shapes) > 1

    @pytest.mark.parametrize("seed", range(30))
    def test_good_and_integral(self, any_field, seed):
        m = 3 + seed % 5
        lat = sample_lattice(any_field, m, 2 * any_field.e + 3, seed)
        assert lat.rank == m
        assert lat.is_integral
        assert bong_violations(lat.a) == []

    @pytest.mark.parametrize("prefix", [1, 2, 3])
    def test_hyperbolic_prefix(self, any_field, prefix):
        e = any_field.e
        lat = sample_lattice(any_field, 7, 2 * e + 2, prefix, hyperbolic_prefix=prefix)
        assert lat.R[: 2 * prefix] == (0, -2 * e) * prefix

    def test_rank_one(self, q2):
        lat = sample_lattice(q2, 1, 2, 5)
        assert lat.rank == 1
        assert 0 <= lat.R[0] <= 2


class TestArguments:

    def test_rank(self, q2):
        with pytest.raises(BadParams):
            sample_lattice(q2, 0, 4, 1)

    def test_r_bound(self, ramified):
        with pytest.raises(BadParams):
            sample_lattice(ramified, 4, 3, 1)

    def test_prefix_too_long(self, q2):
        with pytest.raises(BadParams):
            sample_lattice(q2, 5, 4, 1, hyperbolic_prefix=3)


def test_boundary_increments():
    assert boundary_increments(1) == (-2, 0, 1, 2, 3)
    assert boundary_increments(2) == (-4, -2, 1, 4, 5)
