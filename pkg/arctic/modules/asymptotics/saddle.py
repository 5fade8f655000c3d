"""
Saddle-point data of the tangent method.

For a single path leaving the last column at height mu*kappa*N and reaching
(lambda*N, 0), the leading action S_0 is stationary at the closed forms
below. ``saddle_residuals`` plugs them back into the saddle equations.
"""

import logging

from mpmath import mp, mpf

from arctic.core.errors import ArgumentError
from arctic.core.trig_core import cos, cot, derivative, innermost, log, sin, sqrt
from arctic.modules.asymptotics.free_energy import _alpha, one_point_exponent, t_param
from arctic.modules.partition.weights import validate_domain
from arctic.modules.paths.path_weights import path_weights
from arctic.schemas.models import ExponentKind, ModelKind, ModelParams, SaddleData

logger = logging.getLogger(__name__)

BISECTION_STEPS = 200


def _pq(u, v, eta, xi):
    a, b = u - v, u + v
    p = sin(a - xi + eta) * sin(a - xi - eta)
    q = sin(b + xi + eta) * sin(b + xi - eta)
    return p, q


# -- kappa ----------------------------------------------------------------------

def _kappa_sixv(w, eta, xi):
    al = _alpha(eta)
    bracket = cot(w - xi - eta) + cot(xi) - al * cot(al * xi) - al * cot(al * (w - xi - eta))
    return bracket * sin(w - xi + eta) * sin(w - xi - eta) / sin(2 * eta)


def _kappa_sixvp(u, v, eta, xi):
    al = _alpha(eta)
    a, b = u - v, u + v
    p, q = _pq(u, v, eta, xi)
    plain = cot(a - eta - xi) + cot(xi) + cot(xi + 2 * v) - cot(b + eta + xi)
    scaled = (
        cot(al * (a - eta - xi))
        + cot(al * xi)
        + cot(al * (xi + 2 * v + 2 * eta))
        - cot(al * (b + eta + xi))
    )
    return (plain - al * scaled) * p * q / (sin(2 * eta) * (p + q))


def _kappa_twentyv(u, v, eta, xi):
    p, q = _pq(u, v, eta, xi)
    return _kappa_sixvp(u, v, eta, xi) / 2 + q / (2 * (p + q))


def kappa(params: ModelParams, xi):
    """kappa[xi]: the exit height is mu * kappa in rescaled units (DT: kappa_DT)."""
    u, v, eta = params.u, params.v, params.eta
    if params.model == ModelKind.SIXV:
        return _kappa_sixv(u - v, eta, xi)
    if params.model == ModelKind.SIXVP:
        return _kappa_sixvp(u, v, eta, xi)
    if params.model == ModelKind.TWENTYV:
        return _kappa_twentyv(u, v, eta, xi)
    return 2 * _kappa_twentyv(u, v, eta, xi) - 1


# -- tangent slopes --------------------------------------------------------------

def slope(params: ModelParams, xi):
    """A[xi] of the tangent family y + A x - B = 0."""
    u, v, eta = params.u, params.v, params.eta
    if params.model == ModelKind.DT:
        return -cot(2 * xi)
    p, q = _pq(u, v, eta, xi)
    edge = sin(xi) * sin(xi - 2 * eta)
    if params.model == ModelKind.SIXV:
        return p / edge
    if params.model == ModelKind.SIXVP:
        return 2 * p * q / (edge * (p + q))
    b = u + v
    return (cos(2 * eta) - cos(b + eta) * cos(b - eta + 2 * xi)) / (p + q) * p / edge


def intercept(params: ModelParams, xi):
    """B[xi]: mu * kappa, so that (0, B) is the exit point."""
    k = kappa(params, xi)
    return 2 * k if params.mu == 2 else k


def branch_range(params: ModelParams, full: bool = False) -> tuple:
    """Closed xi-interval on which A[xi] runs through [0, oo)."""
    u, v, eta = params.u, params.v, params.eta
    pi = mp.pi
    if params.model == ModelKind.SIXV:
        lo = u - v + eta - pi
    elif params.model == ModelKind.SIXVP:
        lo = eta + abs(u) - v - pi
    elif params.model == ModelKind.TWENTYV:
        lo = eta + u - v - pi
    else:
        lo = -3 * pi / 8 if full else -pi / 4
    return lo, mpf(0)


def check_in_range(params: ModelParams, xi, full: bool = None):
    if full is None:
        full = params.model == ModelKind.DT
    lo, hi = branch_range(params, full)
    x = innermost(xi)
    slack = mpf(2) ** (-(mp.prec - 8))
    if not lo - slack <= x <= hi + slack:
        raise ArgumentError(
            f"xi={mp.nstr(x, 10)} outside the branch range [{mp.nstr(lo, 10)}, {mp.nstr(hi, 10)}]"
        )


# -- saddle unknowns -----------------------------------------------------------------

def _twentyv_reduced(params: ModelParams, xi, k):
    """
    Solve the single-path saddle of the 20V resolvent in the reduced unknowns
    (z, w = 1/t); returns (lambda, [p3, p4, p5, p6]).
    """
    a1, a2, a3, a4, a5, a6 = path_weights(params).alpha
    w = 1 / t_param(params, xi)
    qa = a5 * w + a6 * w ** 2
    qb = a2 + a3 * w + a4 * w ** 2
    qc = a1 * w - 1
    # root continuing z = (1 - a1 w) / qb at qa = 0
    z = -2 * qc / (qb + sqrt(qb ** 2 - 4 * qa * qc))
    p_w = a1 + a3 * z + 2 * a4 * w * z + a5 * z ** 2 + 2 * a6 * w * z ** 2
    p_z = a2 + a3 * w + a4 * w ** 2 + 2 * a5 * w * z + 2 * a6 * w ** 2 * z
    d = 2 * k / (w * p_w)
    lam = d * z * p_z
    return lam, [a3 * w * z * d, a4 * w ** 2 * z * d, a5 * w * z ** 2 * d, a6 * w ** 2 * z ** 2 * d]


def _p_values(params: ModelParams, xi, k, t):
    u, v, eta = params.u, params.v, params.eta
    a, b = u - v, u + v
    s2 = sin(2 * eta)
    if params.model == ModelKind.SIXV:
        return [k * sin(a - 3 * eta) * sin(xi) / (sin(a - xi - eta) * s2)]
    if params.model == ModelKind.SIXVP:
        return [
            -k * sin(b + eta) * sin(xi) / (s2 * sin(b - eta + xi)),
            k * sin(a - 3 * eta) * sin(xi) / (s2 * sin(a - eta - xi)),
            k * sin(b + 3 * eta) * sin(xi) / (s2 * sin(b + eta + xi)),
        ]
    if params.model == ModelKind.TWENTYV:
        return _twentyv_reduced(params, xi, k)[1]
    return [k * (t - 1) / (2 * t)]


def saddle_data(params: ModelParams, xi) -> SaddleData:
    """Closed-form (t, kappa, lambda, p) at xi in the branch range."""
    validate_domain(params)
    xi = mpf(xi)
    check_in_range(params, xi)
    t = t_param(params, xi)
    k = kappa(params, xi)
    a = slope(params, xi)
    if params.model == ModelKind.DT:
        lam = k * (t ** 2 - 1) / (2 * t)
    else:
        lam = intercept(params, xi) / a
    return SaddleData(model=params.model, xi=xi, t=t, kappa=k, lam=lam, p=_p_values(params, xi, k, t))


def reduced_lambda_20v(params: ModelParams, xi):
    """lambda from the reduced 20V solve, independent of the printed slope."""
    return _twentyv_reduced(params, mpf(xi), kappa(params, mpf(xi)))[0]


# -- residuals -------------------------------------------------------------------------

def _action_derivative(params: ModelParams, xi, k):
    """d/dxi of S_0 at fixed kappa."""
    _, dlog_t = derivative(lambda x: log(t_param(params, x)), xi)
    _, dphi = derivative(lambda x: one_point_exponent(params, x, ExponentKind.PHI), xi)
    if params.model == ModelKind.TWENTYV:
        return dphi + 2 * k * dlog_t
    if params.model == ModelKind.DT:
        return dphi + (1 + k) * dlog_t
    return dphi + k * dlog_t


def saddle_residuals(params: ModelParams, xi) -> list:
    """|lhs - rhs| of every saddle equation, then |d S_0 / d xi|."""
    data = saddle_data(params, xi)
    t, k, lam, p = data.t, data.kappa, data.lam, data.p
    gamma = path_weights(params).gamma
    if params.model == ModelKind.SIXV:
        g1, g2 = gamma
        (p2,) = p
        residuals = [
            t * (k - p2) - g1 * (k + lam - p2),
            g1 * p2 * (k + lam - p2) - g2 * (k - p2) * (lam - p2),
        ]
    elif params.model == ModelKind.SIXVP:
        g1, g2, g3, g4 = gamma
        p2, p3, p4 = p
        rest = lam - p2 - p3 - p4
        residuals = [
            t * (p3 - k) * (p4 - k) - g1 * g2 * (p2 + k) * (k + rest),
            g1 * p2 * (k + rest) - g2 * (p2 + k) * rest,
            g1 * p3 * (k + rest) - g3 * (k - p3) * rest,
            g1 * p4 * (k + rest) - g4 * (k - p4) * rest,
        ]
    elif params.model == ModelKind.TWENTYV:
        a1, a2, a3, a4, a5, a6 = path_weights(params).alpha
        p3, p4, p5, p6 = p
        d = 2 * k + lam - p3 - 2 * p4 - 2 * p5 - 3 * p6
        e = 2 * k - p3 - 2 * p4 - p5 - 2 * p6
        f = lam - p3 - p4 - 2 * p5 - 2 * p6
        residuals = [
            t * e - a1 * d,
            a1 * a2 * p3 * d - a3 * e * f,
            a1 ** 2 * a2 * p4 * d ** 2 - a4 * e ** 2 * f,
            a1 * a2 ** 2 * p5 * d ** 2 - a5 * e * f ** 2,
            a1 ** 2 * a2 ** 2 * p6 * d ** 3 - a6 * e ** 2 * f ** 2,
        ]
    else:
        (p3,) = p
        residuals = [
            t * (k - p3) - (k + lam - p3),
            p3 * (k + lam - p3) - (k - p3) * (lam - p3),
        ]
    residuals.append(_action_derivative(params, data.xi, k))
    logger.debug(f"{params.model.value} saddle residuals at xi={mp.nstr(data.xi, 8)}")
    return [abs(r) for r in residuals]


def kappa_from_exponent(params: ModelParams, xi):
    """kappa from -(t / t') phi' by dual differentiation."""
    t, dt = derivative(lambda x: t_param(params, x), xi)
    _, dphi = derivative(lambda x: one_point_exponent(params, x, ExponentKind.PHI), xi)
    base = -t / dt * dphi
    if params.model == ModelKind.TWENTYV:
        return base / 2
    if params.model == ModelKind.DT:
        return base - 1
    return base


def kappa_consistency(params: ModelParams, xi):
    validate_domain(params)
    xi = mpf(xi)
    return abs(kappa(params, xi) - kappa_from_exponent(params, xi))


def solve_xi_for_kappa(params: ModelParams, target, shrink="1e-12"):
    """
    xi* with kappa[xi*] = target, by bisection on the branch range.
    Monotonicity is only checked at the bracket ends.
    """
    validate_domain(params)
    target = mpf(target)
    lo, hi = branch_range(params)
    width = hi - lo
    lo, hi = lo + mpf(shrink) * width, hi - mpf(shrink) * width
    f_lo = kappa(params, lo) - target
    f_hi = kappa(params, hi) - target
    if f_lo * f_hi > 0:
        raise ArgumentError(f"kappa={mp.nstr(target, 10)} is not attained on the branch range")
    for _ in range(BISECTION_STEPS):
        mid = (lo + hi) / 2
        f_mid = kappa(params, mid) - target
        if f_mid == 0:
            return mid
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return (lo + hi) / 2
