"""
Domino tilings of the Aztec triangle through non-intersecting Schroder
paths, counted with the Lindstrom-Gessel-Viennot determinant.

Path i starts at A_i = (-2n+1+i, i) and path j ends at B_j = (-2(n-1-j), 0).
Each path uses east, south and south-east steps, so the number of paths
between two points is a Delannoy number.
"""

import logging
from math import comb

from sympy import Matrix

from arctic.core.config import ENUMERATION_LIMITS
from arctic.core.errors import ArgumentError, CapacityError
from arctic.modules.enumerate.vertex_models import enumerate_vertex_model
from arctic.modules.partition.weights import unit_weights
from arctic.schemas.models import ModelKind, RefinedCounts

logger = logging.getLogger(__name__)


def delannoy(a: int, b: int) -> int:
    if a < 0 or b < 0:
        return 0
    return sum(comb(a, k) * comb(b, k) * 2 ** k for k in range(min(a, b) + 1))


def _paths(start: tuple, end: tuple) -> int:
    return delannoy(end[0] - start[0], start[1] - end[1])


def _lgv_count(starts: list, column) -> int:
    n = len(starts)
    rows = [[column(i, j) for j in range(n)] for i in range(n)]
    return int(Matrix(rows).det(method="bareiss"))


def count_aztec_triangle(n: int) -> RefinedCounts:
    """Tilings of T_n and their split by the entry height of the topmost path."""
    if n < 1:
        raise ArgumentError(f"n must be at least 1, got {n}")
    limit = ENUMERATION_LIMITS["dt"]
    if n > limit:
        raise CapacityError(f"Aztec-triangle counting is capped at n={limit}, got {n}")

    starts = [(-2 * n + 1 + i, i) for i in range(n)]
    ends = [(-2 * (n - 1 - j), 0) for j in range(n)]

    total = _lgv_count(starts, lambda i, j: _paths(starts[i], ends[j]))

    by_exit = []
    for k in range(n):
        def column(i, j, k=k):
            if j < n - 1:
                return _paths(starts[i], ends[j])
            return _paths(starts[i], (-1, k)) + _paths(starts[i], (-1, k + 1))

        by_exit.append(_lgv_count(starts, column))
    logger.debug(f"Aztec triangle n={n}: total {total}, refined {by_exit}")
    return RefinedCounts(model=ModelKind.DT, n=n, total=total, by_exit=by_exit, first_k=0)


def refined_dt_identity(n: int) -> int:
    """
    Largest |Z^DT_{n,k} - Z^20V_{n,n+k+1} - Z^20V_{n,n+k}| over k, on integers.
    """
    dt = count_aztec_triangle(n)
    twenty = enumerate_vertex_model(unit_weights(ModelKind.TWENTYV), n).by_exit
    # Z^20V_{n,k} for k = 1..2n-1, zero at k = 2n
    z = {k: twenty[k - 1] for k in range(1, 2 * n)}
    z[2 * n] = 0
    return max(
        abs(dt.by_exit[k] - (z[n + k + 1] + z[n + k]))
        for k in range(n)
    )
