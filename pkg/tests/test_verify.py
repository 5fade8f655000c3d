"""
Unit tests for the verification suites.

Tests cover:
- Closed-form determinants at five points up to n = 8
- Recursions up to n = 6
- Path closed forms on the 30 x 30 grid
- Saddle equations at ten xi per point
"""

import re

from arctic.modules.verify.suites import PATH_GRID, run_suite


def named(results, pattern):
    return [r for r in results if re.fullmatch(pattern, r.name)]


class TestSuites:
    """Tests for the coverage and outcome of each suite."""

    def test_closed_forms_cover_five_points_up_to_n_8(self):
        """Test both closed-form determinants at five points and every n <= 8."""
        results = run_suite("closed_forms")
        for case in ("classical", "free-fermion"):
            checks = named(results, rf"{case} Delta_\d\((.*)\)")
            assert len(checks) == 5 * 8
            assert {int(re.search(r"Delta_(\d)", r.name).group(1)) for r in checks} == set(range(1, 9))
        assert all(r.passed for r in results), [r.name for r in results if not r.passed]

    def test_free_fermion_point_is_among_closed_forms(self):
        """Test that u = pi/16, v = -5pi/8 is checked up to n = 8."""
        results = run_suite("closed_forms")
        assert named(results, r"free-fermion Delta_8\(0\.19635, -1\.9635\)")

    def test_path_grid_reaches_thirty(self):
        """Test the grid size of the path comparison."""
        assert PATH_GRID == 30
        results = run_suite("closed_forms")
        assert len(named(results, r".* path closed form vs transfer")) == 5

    def test_recursions_reach_n_6_at_three_points(self):
        """Test the Delta and one-point recursions up to n = 6."""
        results = run_suite("recursions")
        deepest = named(results, r".* Delta recursion n=6")
        assert len(deepest) == 3
        assert all(r.passed for r in results), [r.name for r in results if not r.passed]

    def test_saddles_use_ten_xi_per_point(self):
        """Test ten saddle checks per parameter point."""
        results = run_suite("saddles")
        assert len(named(results, r".* saddle equations")) == 5 * 10
        assert all(r.passed for r in results), [r.name for r in results if not r.passed]
