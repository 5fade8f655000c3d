"""
Column-by-column transfer for the 20V model with DWBC3 on the quadrangle
Q_n = {(x, y): 1 <= x <= n, n+1-x <= y <= 2n-1}.

Edges leave a vertex (x, y) horizontally to (x+1, y), diagonally to
(x+1, y-1) and vertically to (x, y-1). Paths enter on every horizontal edge
of column 1, leave through the vertical edge below the bottom vertex of every
column, and never cross the E side.
"""

import logging

from arctic.schemas.models import ModelKind, RefinedCounts, WeightTable

logger = logging.getLogger(__name__)

DIRECTIONS = ("h", "d", "v")

# omega index for a single path entering along X and leaving along Y
_SINGLE = {
    ("h", "h"): 6,
    ("d", "d"): 3,
    ("v", "v"): 1,
    ("h", "d"): 5,
    ("d", "h"): 5,
    ("h", "v"): 4,
    ("v", "h"): 4,
    ("d", "v"): 2,
    ("v", "d"): 2,
}


def vertex_weight(omega: list, inputs: frozenset, outputs: frozenset):
    """Weight of a vertex given its occupied in-edges and out-edges, or None."""
    if len(inputs) != len(outputs):
        return None
    if len(inputs) in (0, 3):
        return omega[0]
    if len(inputs) == 1:
        (x,) = inputs
        (y,) = outputs
    else:
        (x,) = set(DIRECTIONS) - inputs
        (y,) = set(DIRECTIONS) - outputs
    return omega[_SINGLE[(x, y)]]


def _output_choices(count: int):
    from itertools import combinations

    return [frozenset(c) for c in combinations(DIRECTIONS, count)]


def enumerate_twenty_vertex(weights: WeightTable, n: int) -> RefinedCounts:
    omega = list(weights.omega)
    top = 2 * n - 1
    # pending edges into the next column: ("h", y) or ("d", y) keyed by target row
    states = {(frozenset(("h", y) for y in range(n, top + 1)), None): 1}

    for x in range(1, n + 1):
        bottom = n + 1 - x
        last = x == n
        partial = {}
        for (pending, tag), weight in states.items():
            key = (frozenset(), 0, tag)
            partial[(pending, key)] = partial.get((pending, key), 0) + weight
        for y in range(top, bottom - 1, -1):
            grown = {}
            for (pending, (created, carry, tag)), weight in partial.items():
                inputs = set()
                if ("h", y) in pending:
                    inputs.add("h")
                if ("d", y) in pending:
                    inputs.add("d")
                if carry:
                    inputs.add("v")
                inputs = frozenset(inputs)
                entry_tag = tag
                if last and tag is None and "v" not in inputs and inputs:
                    entry_tag = (y, "h" if "h" in inputs else "d")
                for outputs in _output_choices(len(inputs)):
                    if last and ("h" in outputs or "d" in outputs):
                        continue
                    if y == bottom and "v" not in outputs:
                        continue
                    w = vertex_weight(omega, inputs, outputs)
                    if w is None:
                        continue
                    made = set(created)
                    if "h" in outputs:
                        made.add(("h", y))
                    if "d" in outputs:
                        made.add(("d", y - 1))
                    nkey = (pending, (frozenset(made), 1 if "v" in outputs else 0, entry_tag))
                    grown[nkey] = grown.get(nkey, 0) + weight * w
            partial = grown
        states = {}
        for (pending, (created, carry, tag)), weight in partial.items():
            # the forced vertical exit below the bottom vertex
            if not carry:
                continue
            key = (created, tag)
            states[key] = states.get(key, 0) + weight

    horizontal = [0] * top
    diagonal = [0] * top
    for (created, tag), weight in states.items():
        if created or tag is None:
            continue
        y, kind = tag
        if kind == "h":
            horizontal[y - 1] += weight
        else:
            diagonal[y - 1] += weight
    by_exit = [hz + dg for hz, dg in zip(horizontal, diagonal)]
    logger.debug(f"20v n={n}: refined counts {by_exit}")
    return RefinedCounts(
        model=ModelKind.TWENTYV,
        n=n,
        total=sum(by_exit),
        by_exit=by_exit,
        by_exit_horizontal=horizontal,
        by_exit_diagonal=diagonal,
    )
