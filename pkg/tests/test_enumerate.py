"""
Unit tests for the brute-force and LGV oracles.

Tests cover:
- Unit-weight counts of 6V, 6V' and 20V configurations
- Refined counts by exit row
- Aztec-triangle tilings and the refined domino identity
- Size caps and input validation
"""

import pytest
from mpmath import mpf

from arctic.core.errors import ArgumentError, CapacityError
from arctic.modules.enumerate.aztec import count_aztec_triangle, delannoy, refined_dt_identity
from arctic.modules.enumerate.twenty_vertex import vertex_weight
from arctic.modules.enumerate.vertex_models import enumerate_vertex_model
from arctic.modules.partition.partition_fn import asm_count, twentyv_count, vsasm_count
from arctic.modules.partition.weights import unit_weights
from arctic.schemas.models import ModelKind, WeightTable


class TestSixVertexEnumeration:
    """Tests for the row-transfer enumeration."""

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_unit_weights_return_asm_count(self, n):
        """Test that 6V-DWBC configurations are counted by ASMs."""
        assert enumerate_vertex_model(unit_weights(ModelKind.SIXV), n).total == asm_count(n)

    def test_refined_counts_return_refined_asm_numbers(self):
        """Test the refined ASM numbers 7, 14, 14, 7."""
        counts = enumerate_vertex_model(unit_weights(ModelKind.SIXV), 4)
        assert counts.by_exit == [7, 14, 14, 7]
        assert counts.first_k == 1

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_sixvp_unit_weights_return_vsasm_count(self, n):
        """Test that 6V' configurations are counted by VSASMs."""
        counts = enumerate_vertex_model(unit_weights(ModelKind.SIXVP), n)
        assert counts.total == vsasm_count(n)
        assert len(counts.by_exit) == 2 * n - 1

    def test_incomplete_table_raises_argument_error(self):
        """Test that every weight of the model is required."""
        with pytest.raises(ArgumentError):
            enumerate_vertex_model(WeightTable(model=ModelKind.SIXV, a=1, b=1), 2)

    def test_size_above_cap_raises_capacity_error(self):
        """Test the brute-force size cap."""
        with pytest.raises(CapacityError):
            enumerate_vertex_model(unit_weights(ModelKind.SIXV), 7)

    def test_size_zero_raises_argument_error(self):
        """Test that n must be positive."""
        with pytest.raises(ArgumentError):
            enumerate_vertex_model(unit_weights(ModelKind.SIXV), 0)

    def test_wrong_source_raises_argument_error(self):
        """Test that only params or weight tables are accepted."""
        with pytest.raises(ArgumentError):
            enumerate_vertex_model({"a": 1}, 2)


class TestTwentyVertexEnumeration:
    """Tests for the column-transfer enumeration of the 20V model."""

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_unit_weights_return_20v_count(self, n):
        """Test 1, 4, 60 configurations with DWBC3."""
        counts = enumerate_vertex_model(unit_weights(ModelKind.TWENTYV), n)
        assert counts.total == twentyv_count(n)

    def test_refined_counts_split_by_last_step(self):
        """Test that horizontal and diagonal refinements add up."""
        counts = enumerate_vertex_model(unit_weights(ModelKind.TWENTYV), 2)
        assert len(counts.by_exit) == 3
        assert [h + d for h, d in zip(counts.by_exit_horizontal, counts.by_exit_diagonal)] == counts.by_exit

    def test_vertex_weight_empty_and_full_return_omega0(self):
        """Test that empty and fully occupied vertices share omega_0."""
        omega = list(range(7))
        assert vertex_weight(omega, frozenset(), frozenset()) == 0
        full = frozenset(("h", "d", "v"))
        assert vertex_weight(omega, full, full) == 0

    def test_vertex_weight_unbalanced_returns_none(self):
        """Test that paths are conserved at every vertex."""
        assert vertex_weight(list(range(7)), frozenset(("h",)), frozenset()) is None

    def test_weighted_enumeration_matches_partition_function(self):
        """Test Z_2 at the uniform point by brute force."""
        from arctic.modules.partition.partition_fn import partition_fn
        from arctic.modules.partition.weights import named_point

        params = named_point("uniform").params
        total = enumerate_vertex_model(params, 2).total
        assert abs(total - partition_fn(params, 2)) < mpf("1e-20")


class TestAztecTriangle:
    """Tests for LGV counting of domino tilings."""

    def test_delannoy_returns_known_values(self):
        """Test D(1,1) = 3, D(2,2) = 13, D(3,3) = 63."""
        assert [delannoy(k, k) for k in (1, 2, 3)] == [3, 13, 63]
        assert delannoy(-1, 2) == 0

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_tilings_return_20v_count(self, n):
        """Test that tilings of the Aztec triangle match 20V configurations."""
        assert count_aztec_triangle(n).total == twentyv_count(n)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_refined_identity_vanishes(self, n):
        """Test the refined domino / 20V identity on integers."""
        assert refined_dt_identity(n) == 0

    def test_refined_counts_start_at_zero(self):
        """Test that domino exit heights are counted from 0."""
        counts = count_aztec_triangle(3)
        assert counts.first_k == 0
        assert len(counts.by_exit) == 3
        assert counts.model == ModelKind.DT

    def test_size_above_cap_raises_capacity_error(self):
        """Test the LGV size cap."""
        with pytest.raises(CapacityError):
            count_aztec_triangle(13)

    def test_unit_counts_are_integers(self):
        """Test that LGV counts come back as exact integers."""
        assert isinstance(count_aztec_triangle(2).total, int)
