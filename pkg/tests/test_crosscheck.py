"""
Cross-validation of the universality formulations against each other and
against the testing-set oracle.

The long Q_2 run is marked slow; run it with ``pytest -m slow -n auto``.
"""

import pytest

from dyadicforms.enums import Method
from dyadicforms.errors import BadParams
from dyadicforms.universality import crosscheck, methods_for


class TestMethodsFor:

    def test_even(self):
        assert methods_for(2) == [Method.THM11, Method.EVEN41, Method.EVEN47, Method.TESTING_SET]

    def test_odd_without_oracle(self):
        assert methods_for(3, oracle=False) == [Method.THM11, Method.ODD51, Method.ODD53]


class TestReport:

    def test_empty_run(self, q2):
        report = crosscheck(q2, 2, 0, 1)
        assert report.ok
        assert report.count == 0
        assert report.universal == report.not_universal == 0
        assert report.disagreements == []

    def test_counts_add_up(self, q2):
        report = crosscheck(q2, 2, 25, 3)
        assert report.universal + report.not_universal + len(report.disagreements) == 25
        assert report.seed == 3
        assert report.methods == methods_for(2)

    def test_reproducible(self, q2):
        first = crosscheck(q2, 3, 20, 9, oracle=False)
        second = crosscheck(q2, 3, 20, 9, oracle=False)
        assert (first.universal, first.not_universal) == (second.universal, second.not_universal)

    def test_bad_arguments(self, q2):
        with pytest.raises(BadParams):
            crosscheck(q2, 1, 5, 0)
        with pytest.raises(BadParams):
            crosscheck(q2, 2, -1, 0)


class TestAgreement:
    """Every formulation gives the same verdict on every sample."""

    @pytest.mark.parametrize("n", [2, 3])
    def test_small_runs(self, any_field, n):
        report = crosscheck(any_field, n, 40, 7)
        assert report.ok, report.disagreements

    @pytest.mark.parametrize("n", [4, 5])
    def test_higher_n_without_oracle(self, q2, n):
        report = crosscheck(q2, n, 60, 13, oracle=False)
        assert report.ok, report.disagreements

    @pytest.mark.slow
    def test_q2_n2_500(self, q2):
        report = crosscheck(q2, 2, 500, 42)
        assert report.ok, report.disagreements
        assert report.universal > 0
        assert report.not_universal > 0

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_500_samples_per_field(self, any_field, n):
        report = crosscheck(any_field, n, 500, 2024 + n)
        assert report.ok, report.disagreements
        assert report.count == 500
        assert Method.TESTING_SET in report.methods
