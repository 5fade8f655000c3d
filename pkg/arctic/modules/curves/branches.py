"""
Sampled arctic-curve branches.

NE: envelope of the model's own tangent family. SE: NE branch of the
star-involuted parameters, moved by the SE map. FULL: the domino curve on
its extended range. NW/SW: central-symmetry completion of the 6V curve.
"""

import logging

from mpmath import mp, mpf

from arctic.core.config import CHEBYSHEV_END_SHRINK
from arctic.core.errors import ArgumentError
from arctic.core.trig_core import symmetric_limit
from arctic.modules.asymptotics.saddle import branch_range
from arctic.modules.curves.tangent import (
    _envelope,
    central_symmetry,
    cruciform_images,
    se_branch_map,
    star_involution,
)
from arctic.modules.partition.weights import validate_domain
from arctic.schemas.models import Branch, BranchId, CurvePoint, ModelKind, ModelParams

logger = logging.getLogger(__name__)

CONJECTURAL = "conjectural composition"
MATCH_STEPS = 80


def chebyshev_nodes(lo, hi, num_points: int, shrink=CHEBYSHEV_END_SHRINK) -> list:
    """Chebyshev-Lobatto nodes on [lo, hi] pulled in by shrink * (hi - lo) at both ends."""
    if num_points < 2:
        raise ArgumentError(f"at least two points are needed, got {num_points}")
    lo, hi = mpf(lo), mpf(hi)
    pad = mpf(shrink) * (hi - lo)
    lo, hi = lo + pad, hi - pad
    mid, half = (lo + hi) / 2, (hi - lo) / 2
    last = num_points - 1
    return [mid - half * mp.cos(mp.pi * k / last) for k in range(num_points)]


def _sample(params: ModelParams, full: bool, num_points: int) -> tuple:
    lo, hi = branch_range(params, full)
    return [lo, hi], [_envelope(params, xi) for xi in chebyshev_nodes(lo, hi, num_points)]


def branch_curve(params: ModelParams, branch=BranchId.NE, num_points: int = 200) -> Branch:
    validate_domain(params)
    branch = BranchId(branch)
    model = params.model
    label = None
    if branch == BranchId.NE:
        xi_range, points = _sample(params, False, num_points)
    elif branch == BranchId.SE:
        star = star_involution(params)
        xi_range, points = _sample(star, False, num_points)
        points = [se_branch_map(model, p) for p in points]
    elif branch == BranchId.FULL_ANALYTIC:
        if model != ModelKind.DT:
            raise ArgumentError("the full analytic branch exists for the domino curve only")
        xi_range, points = _sample(params, True, num_points)
    else:
        if model != ModelKind.SIXV:
            raise ArgumentError("NW and SW branches are produced for 6v only")
        source = BranchId.SE if branch == BranchId.NW else BranchId.NE
        seed = branch_curve(params, source, num_points)
        xi_range = seed.xi_range
        points = [central_symmetry(p) for p in seed.points]
        label = "central symmetry"
    logger.debug(f"{model.value} {branch.value}: {len(points)} points")
    return Branch(model=model, branch=branch, xi_range=xi_range, points=points, label=label)


def complete_curve(params: ModelParams, num_points: int = 200) -> list:
    """The four 6V branches NE, SE, NW, SW."""
    if params.model != ModelKind.SIXV:
        raise ArgumentError("central-symmetry completion applies to 6v")
    return [branch_curve(params, b, num_points) for b in (BranchId.NE, BranchId.SE, BranchId.NW, BranchId.SW)]


def cruciform_branches(params: ModelParams, num_points: int = 200) -> list:
    """Eight reflected copies of the domino curve, for pictures only."""
    if params.model != ModelKind.DT:
        raise ArgumentError("the cruciform picture is built from the domino curve")
    full = branch_curve(params, BranchId.FULL_ANALYTIC, num_points)
    images = [cruciform_images(p) for p in full.points]
    return [
        Branch(
            model=ModelKind.DT,
            branch=BranchId.FULL_ANALYTIC,
            xi_range=full.xi_range,
            points=[row[k] for row in images],
            label=CONJECTURAL,
        )
        for k in range(8)
    ]


def removable_envelope(params: ModelParams, xi) -> CurvePoint:
    """Envelope at a xi where the closed forms are 0 * oo but the curve is analytic."""
    xi = mpf(xi)
    x = symmetric_limit(lambda s: _envelope(params, s).x, (xi,), (1,))
    y = symmetric_limit(lambda s: _envelope(params, s).y, (xi,), (1,))
    a = symmetric_limit(lambda s: _envelope(params, s).A, (xi,), (1,))
    b = symmetric_limit(lambda s: _envelope(params, s).B, (xi,), (1,))
    return CurvePoint(xi=xi, x=x, y=y, A=a, B=b)


def continuation_deviation(params: ModelParams, num_points: int = 40):
    """
    Largest |y| gap between the SE branch and the NE parametrisation carried
    past xi = 0, after matching x by bisection. Meaningful at eta = pi/4.
    """
    se = branch_curve(params, BranchId.SE, num_points)
    lo, hi = se.xi_range
    width = hi - lo
    pad = mpf(CHEBYSHEV_END_SHRINK) * width
    left, right = pad, width - pad
    x_left = _envelope(params, left).x
    x_right = _envelope(params, right).x
    increasing = x_right > x_left
    worst = mpf(0)
    for point in se.points:
        a, b = left, right
        for _ in range(MATCH_STEPS):
            mid = (a + b) / 2
            if (_envelope(params, mid).x < point.x) == increasing:
                a = mid
            else:
                b = mid
        matched = _envelope(params, (a + b) / 2)
        worst = max(worst, abs(matched.y - point.y))
    logger.debug(f"continuation deviation {mp.nstr(worst, 5)}")
    return worst
