"""
Brute-force oracles for the 6V-DWBC and 6V' models.

Configurations are osculating paths: one path enters on every marked row of
the W boundary, no path crosses the N or E boundary, and one path leaves
through every column of the S boundary. Rows are swept top to bottom with
the state being the occupation of the vertical edges above the row.
"""

import logging

from mpmath import mp

from arctic.core.cache_store import get_or_compute_enumeration
from arctic.core.config import ENUMERATION_LIMITS
from arctic.core.errors import ArgumentError, CapacityError
from arctic.modules.partition.weights import validate_domain, weight_table
from arctic.schemas.models import ModelKind, ModelParams, RefinedCounts, WeightTable

logger = logging.getLogger(__name__)

# (top, left) -> list of (bottom, right, vertex class)
VERTEX_MOVES = {
    (0, 0): [(0, 0, "a")],
    (1, 1): [(1, 1, "a")],
    (1, 0): [(1, 0, "b"), (0, 1, "c")],
    (0, 1): [(0, 1, "b"), (1, 0, "c")],
}


def _row_weights(weights: WeightTable, row: int) -> dict:
    if weights.model == ModelKind.SIXV:
        return {"a": weights.a, "b": weights.b, "c": weights.c}
    if row % 2 == 1:
        return {"a": weights.a_o, "b": weights.b_o, "c": weights.c_o}
    return {"a": weights.a_e, "b": weights.b_e, "c": weights.c_e}


def _row_transitions(state: tuple, entering: int, classes: dict, row: int):
    """Yield (next_state, weight, turn_row) for one row, E boundary closed."""
    n = len(state)
    partial = [((), entering, 1, None)]
    for col, top in enumerate(state):
        grown = []
        for below, h, weight, turn in partial:
            for bottom, right, cls in VERTEX_MOVES[(top, h)]:
                mark = turn
                if col == n - 1 and cls == "c" and h == 1:
                    mark = row
                grown.append((below + (bottom,), right, weight * classes[cls], mark))
        partial = grown
    for below, h, weight, turn in partial:
        if h == 0:
            yield below, weight, turn


def _sweep(weights: WeightTable, n: int) -> dict:
    rows = n if weights.model == ModelKind.SIXV else 2 * n - 1
    states = {((0,) * n, None): 1}
    for row in range(1, rows + 1):
        entering = 1 if weights.model == ModelKind.SIXV or row % 2 == 1 else 0
        classes = _row_weights(weights, row)
        nxt = {}
        for (state, turn), weight in states.items():
            for below, w, mark in _row_transitions(state, entering, classes, row):
                key = (below, turn if turn is not None else mark)
                nxt[key] = nxt.get(key, 0) + weight * w
        states = nxt
    return {turn: w for (state, turn), w in states.items() if all(state)}


def _check_weights(weights: WeightTable):
    if weights.model == ModelKind.SIXV:
        needed = (weights.a, weights.b, weights.c)
    elif weights.model == ModelKind.SIXVP:
        needed = (weights.a_o, weights.b_o, weights.c_o, weights.a_e, weights.b_e, weights.c_e)
    else:
        needed = tuple(weights.omega or ())
        if len(needed) != 7:
            raise ArgumentError("20v weight tables carry seven omegas")
    if any(w is None for w in needed):
        raise ArgumentError(f"weight table incomplete for model {weights.model.value}")


def enumerate_six_vertex(weights: WeightTable, n: int) -> RefinedCounts:
    rows = n if weights.model == ModelKind.SIXV else 2 * n - 1
    by_turn = _sweep(weights, n)
    # k counts from the bottom row of the last column
    by_exit = [by_turn.get(rows - k + 1, 0) for k in range(1, rows + 1)]
    total = sum(by_turn.values())
    logger.debug(f"{weights.model.value} n={n}: {len(by_turn)} exit classes")
    return RefinedCounts(model=weights.model, n=n, total=total, by_exit=by_exit)


def enumerate_vertex_model(source, n: int) -> RefinedCounts:
    """
    Exact weighted sum over configurations plus refined counts keyed by the
    first visit of the topmost path to the last column.

    source is ModelParams (weights evaluated there) or a WeightTable.
    """
    if isinstance(source, ModelParams):
        validate_domain(source)
        weights = weight_table(source)
    elif isinstance(source, WeightTable):
        weights = source
    else:
        raise ArgumentError("enumeration needs ModelParams or a WeightTable")
    _check_weights(weights)
    limit = ENUMERATION_LIMITS[weights.model.value]
    if n < 1:
        raise ArgumentError(f"n must be at least 1, got {n}")
    if n > limit:
        raise CapacityError(f"{weights.model.value} enumeration is capped at n={limit}, got {n}")

    if weights.model == ModelKind.TWENTYV:
        from arctic.modules.enumerate.twenty_vertex import enumerate_twenty_vertex

        compute = lambda: enumerate_twenty_vertex(weights, n)
    else:
        compute = lambda: enumerate_six_vertex(weights, n)
    key = (weights.model.value, n, mp.prec, tuple(_weight_key(weights)))
    return get_or_compute_enumeration(key, compute)


def _weight_key(weights: WeightTable):
    if weights.omega is not None:
        return tuple(weights.omega)
    return (weights.a, weights.b, weights.c, weights.a_o, weights.b_o, weights.c_o,
            weights.a_e, weights.b_e, weights.c_e)
