import logging

from arctic.core.trig_core import sin
from arctic.modules.partition.weights import twenty_vertex_weights
from arctic.schemas.models import ModelKind, ModelParams, PathWeights

logger = logging.getLogger(__name__)


def path_weights(params: ModelParams, beta=(1, 1)) -> PathWeights:
    """Relative step weights of a single path in the empty quadrant."""
    u, v, eta = params.u, params.v, params.eta
    a = u - v
    b0 = sin(a - eta) / sin(a + eta)
    c0 = sin(2 * eta) / sin(a + eta)
    if params.model == ModelKind.SIXV:
        return PathWeights(
            model=ModelKind.SIXV,
            b0=b0,
            c0=c0,
            gamma=[b0, (c0 ** 2 - b0 ** 2) / b0],
        )
    if params.model == ModelKind.SIXVP:
        b = u + v
        b1 = sin(b + eta) / sin(b - eta)
        c1 = sin(2 * eta) / sin(eta - b)
        return PathWeights(
            model=ModelKind.SIXVP,
            b0=b0,
            c0=c0,
            b1=b1,
            c1=c1,
            gamma=[b0, b1, (c0 ** 2 - b0 ** 2) / b0, (c1 ** 2 - b1 ** 2) / b1],
        )
    om = twenty_vertex_weights(params).omega
    w0 = om[0]
    alpha = [
        om[1] / w0,
        om[6] / w0,
        (w0 * om[3] + om[4] ** 2 - om[1] * om[6]) / w0 ** 2,
        (om[2] ** 2 - om[1] * om[3]) / w0 ** 2,
        (om[5] ** 2 - om[6] * om[3]) / w0 ** 2,
        (
            2 * om[2] * om[4] * om[5]
            + om[1] * om[6] * om[3]
            - om[3] * om[4] ** 2
            - om[1] * om[5] ** 2
            - om[6] * om[2] ** 2
        ) / w0 ** 3,
    ]
    return PathWeights(
        model=ModelKind.TWENTYV,
        alpha=alpha,
        omega=[w / w0 for w in om],
        beta=list(beta),
    )
