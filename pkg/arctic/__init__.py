"""Arctic curves of the six- and twenty-vertex models and of domino tilings of the Aztec triangle."""

from arctic.modules.asymptotics.free_energy import exponent_set, free_energy, one_point_exponent
from arctic.modules.asymptotics.saddle import kappa, saddle_data, solve_xi_for_kappa
from arctic.modules.curves.branches import branch_curve, complete_curve, cruciform_branches
from arctic.modules.curves.tangent import envelope_point, tangent_line
from arctic.modules.partition.partition_fn import one_point, partition_fn, refined_partition
from arctic.modules.partition.weights import make_params, named_point
from arctic.modules.paths.path_partition import path_partition_closed, path_partition_dp
from arctic.modules.verify.suites import run_suite

__version__ = "0.1.0"

__all__ = [
    "branch_curve",
    "complete_curve",
    "cruciform_branches",
    "envelope_point",
    "exponent_set",
    "free_energy",
    "kappa",
    "make_params",
    "named_point",
    "one_point",
    "one_point_exponent",
    "partition_fn",
    "path_partition_closed",
    "path_partition_dp",
    "refined_partition",
    "run_suite",
    "saddle_data",
    "solve_xi_for_kappa",
    "tangent_line",
]
