"""Tests for exception handling in the CLI entry point.

Input errors exit with 2, internal faults with 1, and neither escapes main().
"""

import importlib
from unittest.mock import patch

from dyadicforms.errors import (
    AlphaInconsistency,
    BadParams,
    ClassTableError,
    DyadicFormsError,
    InputError,
    InternalFault,
    NotAGoodBong,
    PrecisionLoss,
    RejectedBong,
)

cli_main = importlib.import_module("dyadicforms.cli.main")


class TestGetVersionString:
    """Tests for get_version_string exception handling."""

    def test_package_not_found(self):
        """PackageNotFoundError returns '0.0.0' fallback."""
        from importlib.metadata import PackageNotFoundError

        with patch("importlib.metadata.version", side_effect=PackageNotFoundError("dyadicforms")):
            assert cli_main.get_version_string() == "0.0.0"

    def test_installed(self):
        with patch("importlib.metadata.version", return_value="9.9.9"):
            assert cli_main.get_version_string() == "9.9.9"


class TestHierarchy:

    def test_branches(self):
        assert issubclass(NotAGoodBong, InputError)
        assert issubclass(PrecisionLoss, InputError)
        assert issubclass(AlphaInconsistency, InternalFault)
        assert issubclass(ClassTableError, InternalFault)
        assert not issubclass(InternalFault, InputError)
        assert issubclass(InputError, DyadicFormsError)

    def test_not_a_good_bong_attributes(self):
        exc = NotAGoodBong(3, "R_i <= R_{i+2}", "R_3 = 2 > R_5 = 0")
        assert exc.index == 3
        assert "i=3" in str(exc)
        assert "R_3 = 2" in str(exc)

    def test_rejected_bong_lists_codes(self):
        exc = RejectedBong(["BONG_GOOD_ORDER", "BONG_DEFECT_STEP"])
        assert isinstance(exc, InputError)
        assert exc.codes == ["BONG_GOOD_ORDER", "BONG_DEFECT_STEP"]
        assert str(exc) == "not a good BONG: BONG_GOOD_ORDER, BONG_DEFECT_STEP"


class TestMainExitCodes:
    """main() maps library exceptions onto exit codes."""

    def test_internal_fault(self, capsys):
        with patch.object(cli_main, "testing_set", side_effect=ClassTableError("norm group too small")):
            code = cli_main.main(["testing-set", "--n", "2"])
        assert code == 1
        assert "Internal error: norm group too small" in capsys.readouterr().err

    def test_input_error(self, capsys):
        with patch.object(cli_main, "testing_set", side_effect=BadParams("n too small")):
            code = cli_main.main(["testing-set", "--n", "2"])
        assert code == 2
        assert "Error: n too small" in capsys.readouterr().err

    def test_precision_loss(self, capsys):
        with patch.object(cli_main, "defect_order", side_effect=PrecisionLoss("need more digits")):
            code = cli_main.main(["defect", "3"])
        assert code == 2

    def test_abort(self, capsys):
        import click

        with patch.object(cli_main, "testing_set", side_effect=click.Abort()):
            code = cli_main.main(["testing-set", "--n", "2"])
        assert code == 1
