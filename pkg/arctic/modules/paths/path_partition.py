"""
Single-path partition functions Y_{k,l} in the empty quadrant.

A path starts at (0, k) right after a horizontal step (for 20V, a horizontal
or diagonal step weighted by beta_1, beta_2), ends at (l, 0) with a vertical
step, and Y_{k,l} is the coefficient of z^l w^(k+1) of the step-to-step
generating function. Two independent evaluations are provided:

- ``path_partition_closed``: binomial sum (6V), parity-split series (6V')
  and the denominator recurrence (20V);
- ``path_partition_dp``: dynamic programming over the transfer matrix
  states, used as the oracle for the closed forms; ``path_table_dp``
  returns the whole k, l grid from one sweep.
"""

import logging
from math import comb

from mpmath import mp, mpf

from arctic.core.errors import ArgumentError
from arctic.modules.paths.path_weights import path_weights
from arctic.schemas.models import ModelKind, ModelParams, PathWeights

logger = logging.getLogger(__name__)

DP_LIMIT = 200


def _check_indices(k: int, l: int):
    if k < 0 or l < 0:
        raise ArgumentError(f"path indices must be non-negative, got k={k}, l={l}")


def _path_model(params: ModelParams) -> ModelKind:
    return ModelKind.TWENTYV if params.model == ModelKind.DT else params.model


# -- closed forms ------------------------------------------------------------------

def _sixv_closed(pw: PathWeights, k: int, l: int):
    g1, g2 = pw.gamma
    total = mpf(0)
    for p2 in range(min(k, l) + 1):
        p1 = l - p2
        total += comb(p1 + k, k) * comb(k, p2) * g1 ** (k + p1) * g2 ** p2
    return pw.c0 * total


def _series_power(gamma, exponent: int, order: int, negative: bool) -> list:
    """Coefficients of (1 + gamma z)^e, or of (1 - gamma z)^(-e), up to z^order."""
    if negative:
        if exponent == 0:
            return [mpf(1)] + [mpf(0)] * order
        return [comb(exponent + i - 1, i) * gamma ** i for i in range(order + 1)]
    return [comb(exponent, i) * gamma ** i if i <= exponent else mpf(0) for i in range(order + 1)]


def _series_product(left: list, right: list) -> list:
    order = len(left) - 1
    return [sum(left[i] * right[j - i] for i in range(j + 1)) for j in range(order + 1)]


def _sixvp_closed(pw: PathWeights, k: int, l: int):
    g1, g2, g3, g4 = pw.gamma
    eps = k % 2
    a = (k + eps) // 2
    b = (k - eps) // 2
    series = _series_power(g3, a, l, negative=False)
    for factor in (
        _series_power(g4, b, l, negative=False),
        _series_power(g1, b + 1, l, negative=True),
        _series_power(g2, a, l, negative=True),
    ):
        series = _series_product(series, factor)
    c = pw.c0 if eps == 0 else pw.c1
    return c * g1 ** a * g2 ** b * series[l]


def _twentyv_numerator(pw: PathWeights) -> dict:
    """Numerator of the 20V generating function, keyed by (z power, w power)."""
    om = pw.omega
    b1, b2 = pw.beta
    return {
        (0, 1): b1 * om[4] + b2 * om[2],
        (1, 2): b1 * (om[2] * om[5] - om[3] * om[4]),
        (1, 1): b2 * (om[4] * om[5] - om[2] * om[6]),
    }


def twentyv_coefficients(pw: PathWeights, max_z: int, max_w: int) -> list:
    """Table G[i][j] of z^i w^j coefficients of N(z, w) / D(z, w)."""
    a1, a2, a3, a4, a5, a6 = pw.alpha
    numerator = _twentyv_numerator(pw)
    shifts = ((0, 1, a1), (1, 0, a2), (1, 1, a3), (1, 2, a4), (2, 1, a5), (2, 2, a6))
    table = [[mpf(0)] * (max_w + 1) for _ in range(max_z + 1)]
    for i in range(max_z + 1):
        for j in range(max_w + 1):
            value = numerator.get((i, j), mpf(0))
            for di, dj, coeff in shifts:
                if i >= di and j >= dj:
                    value += coeff * table[i - di][j - dj]
            table[i][j] = value
    return table


def path_partition_closed(params: ModelParams, k: int, l: int, beta=(1, 1)):
    """Y_{k,l} from the closed-form generating function of the model."""
    _check_indices(k, l)
    pw = path_weights(params, beta)
    model = _path_model(params)
    if model == ModelKind.SIXV:
        return _sixv_closed(pw, k, l)
    if model == ModelKind.SIXVP:
        return _sixvp_closed(pw, k, l)
    return twentyv_coefficients(pw, l, k + 1)[l][k + 1]


# -- dynamic programming oracle -------------------------------------------------------

def _transfer(pw: PathWeights, model: ModelKind):
    """
    (step shifts per state, weight matrix M[next][prev], start vector, read state).
    A step into state r moves by shifts[r] in (z power, w power).
    """
    if model == ModelKind.SIXV:
        b0, c0 = pw.b0, pw.c0
        return (
            [(1, 0), (0, 1)],
            [[b0, c0], [c0, b0]],
            [mpf(1), mpf(0)],
            1,
        )
    if model == ModelKind.SIXVP:
        b0, c0, b1, c1 = pw.b0, pw.c0, pw.b1, pw.c1
        # states: horizontal in odd row, vertical into odd row, horizontal in even row, vertical into even row
        return (
            [(1, 0), (0, 1), (1, 0), (0, 1)],
            [
                [b0, c0, 0, 0],
                [0, 0, c1, b1],
                [0, 0, b1, c1],
                [c0, b0, 0, 0],
            ],
            [mpf(1), mpf(0), mpf(1), mpf(0)],
            3,
        )
    om = pw.omega
    b1, b2 = pw.beta
    # states: horizontal, diagonal, vertical
    return (
        [(1, 0), (1, 1), (0, 1)],
        [
            [om[6], om[5], om[4]],
            [om[5], om[3], om[2]],
            [om[4], om[2], om[1]],
        ],
        [mpf(b1), mpf(b2), mpf(0)],
        2,
    )


def path_table_dp(params: ModelParams, k_max: int, l_max: int, beta=(1, 1)) -> list:
    """Rows Y[k][l] for k <= k_max, l <= l_max from one transfer sweep."""
    _check_indices(k_max, l_max)
    if k_max > DP_LIMIT or l_max > DP_LIMIT:
        raise ArgumentError(f"dynamic programming is limited to k, l <= {DP_LIMIT}")
    model = _path_model(params)
    shifts, matrix, start, read = _transfer(path_weights(params, beta), model)
    states = len(start)
    max_z, max_w = l_max, k_max + 1
    table = [[[mpf(0)] * states for _ in range(max_w + 1)] for _ in range(max_z + 1)]
    for i in range(max_z + 1):
        for j in range(max_w + 1):
            cell = table[i][j]
            for r, (dz, dw) in enumerate(shifts):
                if i < dz or j < dw:
                    continue
                prev = start if (i - dz, j - dw) == (0, 0) else table[i - dz][j - dw]
                cell[r] += sum(matrix[r][s] * prev[s] for s in range(states))
    return [[table[l][k + 1][read] for l in range(l_max + 1)] for k in range(k_max + 1)]


def path_partition_dp(params: ModelParams, k: int, l: int, beta=(1, 1)):
    """Y_{k,l} by summing walks of the transfer matrix state by state."""
    return path_table_dp(params, k, l, beta)[k][l]


def resolvent_residual(params: ModelParams, order: int, beta=(1, 1)):
    """
    Largest coefficient of (I - T) R - v0 up to total order, where R is the
    truncated resolvent series sum_m T^m v0 of the 20V transfer matrix.
    """
    if _path_model(params) != ModelKind.TWENTYV:
        raise ArgumentError("the resolvent check is defined for the 20v transfer matrix")
    shifts, matrix, start, _ = _transfer(path_weights(params, beta), ModelKind.TWENTYV)
    size = order + 1

    def zero():
        return [[[mpf(0)] * 3 for _ in range(size)] for _ in range(size)]

    # R = sum over m of T^m v0, one power at a time
    power = zero()
    power[0][0] = list(start)
    series = zero()
    for _ in range(2 * order + 1):
        nxt = zero()
        for i in range(size):
            for j in range(size):
                series[i][j] = [x + y for x, y in zip(series[i][j], power[i][j])]
                for r, (dz, dw) in enumerate(shifts):
                    if i + dz < size and j + dw < size:
                        nxt[i + dz][j + dw][r] += sum(matrix[r][s] * power[i][j][s] for s in range(3))
        power = nxt

    worst = mpf(0)
    for i in range(size):
        for j in range(size):
            for r, (dz, dw) in enumerate(shifts):
                applied = series[i][j][r]
                if i >= dz and j >= dw:
                    prev = series[i - dz][j - dw]
                    applied -= sum(matrix[r][s] * prev[s] for s in range(3))
                source = start[r] if (i, j) == (0, 0) else 0
                worst = max(worst, abs(applied - source))
    logger.debug(f"resolvent residual at order {order}: {mp.nstr(worst, 5)}")
    return worst
