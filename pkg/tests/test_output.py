"""
Tests for output formatters (payload builders, to_json, to_text).

These are fast tests over Q_2.
"""

import json

import pytest

from dyadicforms.constants import HASSE_CONVENTION
from dyadicforms.field import defect_order, sharp
from dyadicforms.forms import hilbert
from dyadicforms.io.schema import SCHEMA_VERSION, LatticeReport
from dyadicforms.lattice import check_bong, concat, represents, validate_bong
from dyadicforms.output import (
    classes_payload,
    crosscheck_payload,
    defect_payload,
    field_summary,
    hilbert_payload,
    invariants_payload,
    lattice_report,
    minimality_payload,
    rejected_bong_payload,
    representation_payload,
    sharp_payload,
    testing_set_payload,
    to_json,
    to_text,
    universality_payload,
)
from dyadicforms.universality import crosscheck, is_n_universal, representation_matrix, testing_set

from tests.helpers.lattices import block


@pytest.fixture
def not_universal(h_a22_q2):
    return is_n_universal(h_a22_q2, 2)


class TestFieldSummary:

    def test_q2(self, q2):
        summary = field_summary(q2)
        assert (summary.e, summary.f) == (1, 1)
        assert summary.prec == q2.default_prec
        assert summary.eis_poly == q2.eis_poly

    def test_delta_literal_round_trips(self, q2):
        summary = field_summary(q2)
        assert q2.from_digits(summary.delta.val, summary.delta.digits) == q2.delta


class TestLatticeReport:

    def test_h2(self, h2_q2):
        report = lattice_report(h2_q2)
        assert isinstance(report, LatticeReport)
        assert report.R == [0, -2, 0, -2]
        assert report.alpha == ["0", "2", "0"]
        assert report.space.dim == 4
        assert report.space.hasse in (1, -1)

    def test_fractional_alpha(self, ramified):
        report = lattice_report(validate_bong([ramified.one, ramified.pi ** 5]))
        assert report.alpha == ["9/2"]


class TestToJson:

    def test_header(self, h2_q2):
        data = json.loads(to_json(invariants_payload(h2_q2)))
        assert data["schema_version"] == SCHEMA_VERSION
        assert data["hasse_convention"] == HASSE_CONVENTION
        assert set(data["field"]) >= {"e", "f", "prec", "rho", "delta"}

    def test_messages(self, q2):
        lat = validate_bong([q2.pi ** -1])
        data = json.loads(to_json(invariants_payload(lat, check_bong(lat.a))))
        assert data["messages"][0]["code"] == "LATTICE_NOT_INTEGRAL"
        assert data["messages"][0]["severity"] == "warning"

    def test_rejected_bong(self, q2):
        result = check_bong([q2.one, q2.zero])
        data = json.loads(to_json(rejected_bong_payload(q2, result)))
        assert data["lattice"] is None
        assert data["messages"][0]["code"] == "BONG_ZERO_ENTRY"
        assert data["messages"][0]["severity"] == "error"

    def test_representation_witness(self, q2, h2_q2):
        verdict = represents(testing_set(q2, 2)[0].lattice, h2_q2)
        data = json.loads(to_json(representation_payload(q2, verdict)))
        assert data["represented"] is True
        assert data["witness"] is None

    def test_universality(self, q2, not_universal):
        data = json.loads(to_json(universality_payload(q2, 2, not_universal)))
        assert data["universal"] is False
        assert data["method"] == "thm11"
        assert data["witness"] == "FM = H^2"

    def test_testing_set(self, q2):
        entries = testing_set(q2, 3)
        data = json.loads(to_json(testing_set_payload(q2, 3, entries)))
        assert data["count"] == 16
        assert [e["R"] for e in data["entries"]] == [list(e.lattice.R) for e in entries]

    def test_crosscheck(self, q2):
        report = crosscheck(q2, 2, 3, 5)
        data = json.loads(to_json(crosscheck_payload(q2, report)))
        assert data["methods"] == ["thm11", "even41", "even47", "testing_set"]
        assert data["disagreements"] == []

    def test_minimality(self, q2):
        data = json.loads(to_json(minimality_payload(q2, representation_matrix(q2, 2))))
        assert data["minimal"] is True
        assert data["mismatches"] == []

    def test_classes(self, q2):
        data = json.loads(to_json(classes_payload(q2)))
        assert data["count"] == 8
        assert [c["index"] for c in data["classes"]] == list(range(8))

    def test_defect_of_square_is_null(self, q2):
        x = q2.from_int(17)
        data = json.loads(to_json(defect_payload(x, defect_order(x))))
        assert data["d"] is None
        assert data["is_square"] is True

    def test_unicode_kept(self, q2):
        lat = concat(block(q2, "H"), block(q2, "A22rho"))
        assert "ρ" in to_json(invariants_payload(lat))


class TestToText:

    def test_header_line(self, h2_q2):
        text = to_text(invariants_payload(h2_q2))
        first = text.splitlines()[0]
        assert first.startswith("Field e=1 f=1")
        assert HASSE_CONVENTION in first

    def test_lattice(self, h2_q2):
        text = to_text(invariants_payload(h2_q2))
        assert "Jordan: H^2" in text
        assert "R:      [0, -2, 0, -2]" in text

    def test_universality(self, q2, not_universal):
        text = to_text(universality_payload(q2, 2, not_universal))
        assert "2-universal (thm11): no" in text
        assert "failed: FM = H^2" in text

    def test_representation_failure(self, q2, h_a22_q2):
        verdict = represents(block(q2, "piA22rho"), h_a22_q2)
        text = to_text(representation_payload(q2, verdict))
        assert "Represented: no, condition (space) at i=None" in text

    def test_hilbert(self, q2):
        a, b = q2.from_int(-1), q2.from_int(-1)
        assert "= -1" in to_text(hilbert_payload(a, b, hilbert(a, b)))

    def test_sharp(self, q2):
        c = q2.from_int(2)
        c_sharp = sharp(c)
        text = to_text(sharp_payload(c, c_sharp, defect_order(c), defect_order(c_sharp)))
        assert "d = 0" in text
        assert "d = 2" in text

    def test_classes(self, q2):
        text = to_text(classes_payload(q2))
        assert "8 square classes, 4 unit classes" in text
        assert "d=inf" in text
