"""
Unit tests for output writers and the command line.

Tests cover:
- Decimal formatting and CSV / JSON / SVG rendering
- Reading emitted curves back and re-checking tangency from them
- Angle and size parsing
- verify, curve and tabulate commands and their exit codes
"""

import csv
import io
import json
import xml.etree.ElementTree as ElementTree

import pytest
from mpmath import mp, mpf

from arctic.core.errors import ArgumentError, OutputError
from arctic.main import main, parse_angle, parse_sizes
from arctic.modules.curves.branches import branch_curve
from arctic.modules.partition.weights import named_point
from arctic.modules.report.writers import (
    CURVE_COLUMNS,
    emit,
    format_decimal,
    parse_curve_csv,
    read_curve_csv,
    render_curves,
    render_svg,
    render_table,
)
from arctic.schemas.models import BranchId, OutputFormat


def svg_group_ids(text: str) -> set:
    root = ElementTree.fromstring(text.encode("utf-8"))
    return {element.get("id") for element in root.iter() if element.get("id")}


@pytest.fixture
def asm_branch():
    return branch_curve(named_point("asm").params, BranchId.NE, 6)


class TestWriters:
    """Tests for the CSV, JSON and SVG writers."""

    def test_format_decimal_returns_significant_digits(self):
        """Test mp.nstr formatting and integer passthrough."""
        assert format_decimal(mpf(1) / 3, 5) == "0.33333"
        assert format_decimal(7) == "7"

    def test_curve_csv_has_header_and_rows(self, asm_branch):
        """Test one row per sampled point."""
        text = render_curves([asm_branch], OutputFormat.CSV)
        rows = list(csv.DictReader(io.StringIO(text)))
        assert list(rows[0].keys()) == CURVE_COLUMNS
        assert len(rows) == 6
        assert rows[0]["model"] == "6v" and rows[0]["branch"] == "NE"

    def test_curve_csv_parses_back_to_points(self, asm_branch):
        """Test that emitted decimals reproduce the curve."""
        rows = parse_curve_csv(render_curves([asm_branch], OutputFormat.CSV, 30))
        for row, point in zip(rows, asm_branch.points):
            assert abs(row["x"] - point.x) < mpf("1e-28")
            assert abs(row["y"] - point.y) < mpf("1e-28")

    def test_curve_json_is_a_list_of_records(self, asm_branch):
        """Test the JSON rendering."""
        payload = json.loads(render_curves([asm_branch], OutputFormat.JSON))
        assert len(payload) == 6
        assert set(payload[0]) == set(CURVE_COLUMNS)

    def test_svg_groups_name_each_branch(self, asm_branch):
        """Test that the matplotlib SVG carries the domain and one group per branch."""
        ids = svg_group_ids(render_svg([asm_branch]))
        assert "domain" in ids
        assert "branch-NE-0" in ids

    def test_emitted_csv_keeps_tangency(self, asm_branch):
        """Test y + A x - B = 0 on every row read back from the CSV."""
        rows = parse_curve_csv(render_curves([asm_branch], OutputFormat.CSV, 30))
        for row in rows:
            assert abs(row["y"] + row["A"] * row["x"] - row["B"]) < mpf("1e-25")

    def test_empty_svg_raises_output_error(self):
        """Test that there must be something to draw."""
        with pytest.raises(OutputError):
            render_svg([])

    def test_svg_table_raises_output_error(self):
        """Test that tables are csv or json."""
        with pytest.raises(OutputError):
            render_table([{"n": 1}], ["n"], OutputFormat.SVG)

    def test_emit_writes_file(self, tmp_path, asm_branch):
        """Test writing to a nested path and reading it back."""
        target = tmp_path / "out" / "curve.csv"
        emit(render_curves([asm_branch]), str(target))
        assert len(read_curve_csv(target)) == 6

    def test_read_missing_file_raises_output_error(self, tmp_path):
        """Test that unreadable files raise OutputError."""
        with pytest.raises(OutputError):
            read_curve_csv(tmp_path / "missing.csv")


class TestParsing:
    """Tests for command-line value parsing."""

    def test_parse_angle_reads_multiples_of_pi(self):
        """Test pi, -3pi/8 and 2*pi/3."""
        assert parse_angle("pi") == mp.pi
        assert abs(parse_angle("-3pi/8") + 3 * mp.pi / 8) < mpf("1e-100")
        assert abs(parse_angle("2*pi/3") - 2 * mp.pi / 3) < mpf("1e-100")

    def test_parse_angle_reads_decimals(self):
        """Test plain decimals."""
        assert parse_angle("-0.25") == mpf("-0.25")

    def test_parse_angle_rejects_text(self):
        """Test that garbage raises ArgumentError."""
        with pytest.raises(ArgumentError):
            parse_angle("north")

    def test_parse_sizes_reads_ranges_and_lists(self):
        """Test 1..3,5."""
        assert parse_sizes("1..3,5") == [1, 2, 3, 5]

    def test_parse_sizes_rejects_empty(self):
        """Test that an empty range raises ArgumentError."""
        with pytest.raises(ArgumentError):
            parse_sizes("")


class TestCommands:
    """Tests for the verify, curve and tabulate commands."""

    def test_tabulate_partition_returns_asm_counts(self, capsys):
        """Test Z_1..Z_4 at the ASM point."""
        code = main(["tabulate", "partition", "--point", "asm", "--n", "1..4"])
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
        assert [round(float(r["Z"])) for r in rows] == [1, 2, 7, 42]

    def test_tabulate_refined_returns_refined_asm_numbers(self, capsys):
        """Test refined counts through the command line."""
        code = main(["tabulate", "refined", "--point", "asm", "--n", "3", "--format", "json"])
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert [round(float(r["Z"])) for r in payload] == [2, 3, 2]

    def test_tabulate_exponents_lists_each_xi(self, capsys):
        """Test one exponent row per xi."""
        code = main(["tabulate", "exponent", "--point", "uniform", "--xi", "-pi/8,-0.3"])
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
        assert len(rows) == 2
        assert set(rows[0]) == {"model", "xi", "f", "psi", "phi", "t", "kappa"}

    def test_curve_svg_draws_requested_branches(self, capsys):
        """Test NE and SE lines in the SVG output."""
        code = main(["curve", "--point", "asm", "--branches", "NE,SE", "--points", "8", "--format", "svg"])
        assert code == 0
        ids = svg_group_ids(capsys.readouterr().out)
        assert {"branch-NE-0", "branch-SE-1"} <= ids

    def test_domino_curve_reaches_its_corner(self, tmp_path, capsys):
        """Test that the 200-point DT curve passes within 1e-3 of its NW end."""
        target = tmp_path / "dt.csv"
        assert main(["curve", "--point", "dt", "--branches", "FULL", "--points", "200", "--out", str(target)]) == 0
        corner = 2 * mp.sqrt(2) / 3
        rows = read_curve_csv(target)
        assert min(mp.hypot(row["x"] - (corner - 2), row["y"] - corner) for row in rows) < mpf("1e-3")
        assert main(["curve", "--point", "dt", "--branches", "FULL", "--points", "20", "--format", "svg"]) == 0
        assert "branch-FULL-0" in svg_group_ids(capsys.readouterr().out)

    def test_curve_to_file_writes_csv(self, tmp_path):
        """Test --out with an explicit 6V point."""
        target = tmp_path / "curve.csv"
        code = main(
            ["curve", "--model", "6v", "--eta", "pi/4", "--u", "pi/2", "--v", "0", "--points", "5", "--out", str(target)]
        )
        assert code == 0
        assert len(read_curve_csv(target)) == 5

    def test_verify_counts_returns_zero(self, capsys):
        """Test that the counts suite passes."""
        assert main(["verify", "counts"]) == 0
        assert "FAIL" not in capsys.readouterr().out

    def test_verify_all_returns_zero(self, capsys):
        """Test that every suite passes, the asymptotic ones included."""
        assert main(["verify", "all"]) == 0
        assert "FAIL" not in capsys.readouterr().out

    def test_verify_asymptotic_convergence_returns_zero(self, capsys):
        """Test the N = 32 free-energy and exponent comparisons."""
        assert main(["verify", "asymptotic_convergence"]) == 0

    def test_invalid_eta_returns_two(self):
        """Test exit code 2 for parameters outside the domain."""
        assert main(["curve", "--model", "6v", "--eta", "2", "--u", "1", "--v", "0"]) == 2

    def test_one_point_shift_outside_domain_returns_two(self):
        """Test exit code 2 when v + xi leaves the domain."""
        assert main(["tabulate", "one_point", "--point", "asm", "--n", "3", "--xi", "2"]) == 2

    def test_tau_point_without_eta_returns_two(self):
        """Test exit code 2 for an incomplete named point."""
        assert main(["curve", "--point", "tau_asm"]) == 2

    def test_mismatched_model_returns_two(self):
        """Test that --model must agree with --point."""
        assert main(["tabulate", "partition", "--point", "asm", "--model", "20v", "--n", "2"]) == 2

    def test_svg_table_returns_one(self):
        """Test exit code 1 for a library error."""
        assert main(["tabulate", "partition", "--point", "asm", "--n", "2", "--format", "svg"]) == 1

    def test_unknown_suite_exits_with_usage_error(self):
        """Test that argparse rejects unknown suites."""
        with pytest.raises(SystemExit) as exc:
            main(["verify", "everything"])
        assert exc.value.code == 2
