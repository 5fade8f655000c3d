"""
Tangent families y + A(xi) x - B(xi) = 0 and their envelopes.

The envelope point is X = B'/A', Y = B - A X, with A' and B' propagated
by dual numbers in xi. The SE branches come from the NE branch of the
star-involuted model through a fixed coordinate map.
"""

import logging

from mpmath import mp, mpf

from arctic.core.errors import ArgumentError, DegenerateEnvelopeError
from arctic.core.trig_core import Dual
from arctic.modules.asymptotics.saddle import check_in_range, intercept, slope
from arctic.modules.partition.weights import validate_domain
from arctic.schemas.models import CurvePoint, ModelKind, ModelParams, TangentLine

logger = logging.getLogger(__name__)

TWENTYV_SHIFT = (2, -1)
DT_SHIFT = (2, 0)

SECANT_STEP = "1e-6"
FINITE_DIFFERENCE_STEP = "1e-10"


def _tangent_ab(params: ModelParams, xi) -> tuple:
    return slope(params, xi), intercept(params, xi)


def tangent_line(params: ModelParams, xi) -> TangentLine:
    validate_domain(params)
    xi = mpf(xi)
    check_in_range(params, xi)
    a, b = _tangent_ab(params, xi)
    return TangentLine(xi=xi, A=a, B=b)


def _envelope(params: ModelParams, xi) -> CurvePoint:
    """Envelope point without the branch-range check."""
    a, b = _tangent_ab(params, Dual(xi, (1,)))
    da = a.tangents[0] if isinstance(a, Dual) and a.tangents else mpf(0)
    db = b.tangents[0] if isinstance(b, Dual) and b.tangents else mpf(0)
    if da == 0:
        raise DegenerateEnvelopeError(f"A'(xi) vanishes at xi={mp.nstr(xi, 15)}")
    x = db / da
    return CurvePoint(xi=xi, x=x, y=b.primal - a.primal * x, A=a.primal, B=b.primal)


def envelope_point(params: ModelParams, xi) -> CurvePoint:
    validate_domain(params)
    xi = mpf(xi)
    check_in_range(params, xi)
    return _envelope(params, xi)


def tangency_residual(point: CurvePoint):
    """|y + A x - B| for a point and its own tangent."""
    return abs(point.y + point.A * point.x - point.B)


def secant_deviation(params: ModelParams, xi, step=SECANT_STEP):
    """Distance from the envelope point to the meeting point of the tangents at xi and xi + step."""
    xi = mpf(xi)
    step = mpf(step)
    a1, b1 = _tangent_ab(params, xi)
    a2, b2 = _tangent_ab(params, xi + step)
    x = (b1 - b2) / (a1 - a2)
    y = b1 - a1 * x
    point = _envelope(params, xi)
    return mp.sqrt((x - point.x) ** 2 + (y - point.y) ** 2)


def derivative_mismatch(params: ModelParams, xi, step=FINITE_DIFFERENCE_STEP):
    """Largest relative gap between dual and central-difference (A', B')."""
    xi = mpf(xi)
    step = mpf(step)
    a, b = _tangent_ab(params, Dual(xi, (1,)))
    dual = (a.tangents[0], b.tangents[0])
    a_plus, b_plus = _tangent_ab(params, xi + step)
    a_minus, b_minus = _tangent_ab(params, xi - step)
    central = ((a_plus - a_minus) / (2 * step), (b_plus - b_minus) / (2 * step))
    return max(abs(d - c) / max(abs(d), mpf(1)) for d, c in zip(dual, central))


# -- symmetries ------------------------------------------------------------------------

def star_involution(params: ModelParams) -> ModelParams:
    """Parameters of the model whose NE branch maps onto the SE branch."""
    validate_domain(params)
    pi = mp.pi
    if params.model == ModelKind.SIXV:
        # u - v -> pi - (u - v)
        update = {"u": pi - params.u + 2 * params.v}
    elif params.model == ModelKind.SIXVP:
        update = {"u": -params.u, "v": -pi - params.v}
    elif params.model == ModelKind.TWENTYV:
        update = {"v": -pi - params.v}
    else:
        raise ArgumentError("the domino curve has no star-involuted SE branch")
    return validate_domain(params.model_copy(update=update))


def se_branch_map(model: ModelKind, point: CurvePoint) -> CurvePoint:
    """Image of an NE point of the star model; tangent data follow the map."""
    model = ModelKind(model)
    x, y, a, b = point.x, point.y, point.A, point.B
    if model == ModelKind.SIXV:
        return point.model_copy(update={"y": 1 - y, "A": -a, "B": 1 - b})
    if model == ModelKind.SIXVP:
        return point.model_copy(update={"y": 2 - y, "A": -a, "B": 2 - b})
    if model == ModelKind.TWENTYV:
        return point.model_copy(update={"y": 2 - x - y, "A": 1 - a, "B": 2 - b})
    raise ArgumentError("the SE map is defined for 6v, 6vp and 20v")


def central_symmetry(point: CurvePoint) -> CurvePoint:
    """(x, y) -> (-1 - x, 1 - y) of the 6V square."""
    a, b = point.A, point.B
    return point.model_copy(
        update={"x": -1 - point.x, "y": 1 - point.y, "B": 1 - a - b}
    )


# the eight symmetries of the square, acting on shifted coordinates
_DIHEDRAL = (
    ((1, 0), (0, 1)),
    ((-1, 0), (0, 1)),
    ((1, 0), (0, -1)),
    ((-1, 0), (0, -1)),
    ((0, 1), (1, 0)),
    ((0, -1), (1, 0)),
    ((0, 1), (-1, 0)),
    ((0, -1), (-1, 0)),
)


def cruciform_images(point: CurvePoint) -> list:
    """
    The eight reflections of a domino-curve point about the centre
    (-2, 0). Used only for the composite picture.
    """
    sx = DT_SHIFT[0]
    px, py = point.x + sx, point.y
    # the tangent written as n . (X, Y) = c with n = (A, 1)
    n = (point.A, 1)
    c = point.B + sx * point.A
    images = []
    for (m11, m12), (m21, m22) in _DIHEDRAL:
        qx = m11 * px + m12 * py
        qy = m21 * px + m22 * py
        n1 = m11 * n[0] + m12 * n[1]
        n2 = m21 * n[0] + m22 * n[1]
        if n2 == 0:
            a = b = mp.inf
        else:
            a = n1 / n2
            b = c / n2 - sx * a
        images.append(point.model_copy(update={"x": qx - sx, "y": qy, "A": a, "B": b}))
    return images


# -- algebraic equation --------------------------------------------------------------------

def algebraic_polynomial(x, y):
    s = x ** 2 + y ** 2 - mpf(2) / 3
    return (
        3 ** 6 * s ** 5
        - 5 ** 3 * 3 ** 3 * s ** 3
        - 2 * 3 ** 2 * 5 ** 4 * s ** 2
        - 2 ** 2 * 5 ** 5 * (x ** 2 + y ** 2 - 4 * x ** 2 * y ** 2)
    )


def algebraic_residual_20v(point, shift=TWENTYV_SHIFT):
    """The degree-ten polynomial at a curve point moved by shift."""
    if isinstance(point, CurvePoint):
        x, y = point.x, point.y
    else:
        x, y = point
    if tuple(shift) not in (TWENTYV_SHIFT, DT_SHIFT):
        raise ArgumentError(f"unknown shift {shift}")
    return algebraic_polynomial(mpf(x) + shift[0], mpf(y) + shift[1])


def endpoint_height(params: ModelParams):
    """Height of the N border touched at the far end of the NE branch."""
    return 1 if params.model in (ModelKind.SIXV, ModelKind.DT) else 2
