"""
Thermodynamic free energies and one-point exponents.

Conventions: Z_N ~ exp(-N^2 f) and H_N[xi] ~ exp(-N psi). The shifted
exponent phi drops the last-column normalisation, so that the refined
one-point functions are generated by exp(-N phi) in the variable t.
All formulas accept dual numbers in every argument.
"""

import logging

from mpmath import mp, mpf

from arctic.core.config import GUARD_STEP_BITS, working_precision
from arctic.core.errors import ArgumentError
from arctic.core.trig_core import (
    derivative,
    displaced,
    innermost,
    log,
    mixed_derivatives,
    sin,
    sqrt,
    symmetric_limit,
)
from arctic.modules.partition.partition_fn import default_residual_xi, singular_directions
from arctic.modules.partition.weights import validate_domain
from arctic.schemas.models import ExponentKind, ExponentSet, ModelKind, ModelParams

logger = logging.getLogger(__name__)


def _alpha(eta):
    return mp.pi / (mp.pi - 2 * eta)


def alpha(eta):
    """alpha = pi / (pi - 2 eta) on the disordered range 0 < eta < pi/2."""
    eta = mpf(eta)
    if not 0 < eta < mp.pi / 2:
        raise ArgumentError(f"eta={mp.nstr(eta, 10)} outside (0, pi/2)")
    return _alpha(eta)


def _sqrt_abs(x):
    return sqrt(x) if innermost(x) > 0 else sqrt(-x)


def _on_domain(fn, params: ModelParams):
    """fn(u, v) at params; symmetric limit across removable lines u = 0, v = -pi/2."""
    dirs = singular_directions(params)
    if not any(dirs):
        return fn(params.u, params.v)
    with working_precision(mp.prec + 2 * GUARD_STEP_BITS + 32):
        value = symmetric_limit(fn, (params.u, params.v), dirs)
    return +value


# -- free energies ----------------------------------------------------------------

def _f_sixv(w, eta, rho):
    al = _alpha(eta)
    return -log(al * rho * sin(w + eta) * sin(w - eta) / sin(al * (w - eta)))


def _f_sixvp(u, v, eta, rho_o, rho_e):
    al = _alpha(eta)
    a, b = u - v, u + v
    ratio = sin(2 * u) * sin(2 * v) / (sin(2 * al * u) * sin(2 * al * (v + eta)))
    bulk = sin(al * (a - eta)) * sin(al * (-b - eta)) / (
        al * rho_e * rho_o * sin(a + eta) * sin(a - eta) * sin(b + eta) * sin(b - eta)
    )
    return log(ratio) / 2 + log(bulk)


def _f_twentyv(u, v, eta, nu):
    """f of 6V' at unit scales minus the per-site log of the Z^20V / Z^6V' factor."""
    a, b = u - v, u + v
    # same factors as the finite-n ratio, each raised to ~N^2/2
    extra = nu ** 3 * sin(2 * u + 2 * eta) ** 3 * sin(a - eta) * sin(eta - b)
    return _f_sixvp(u, v, eta, 1, 1) - log(extra) / 2


def free_energy(params: ModelParams):
    """f with Z_N ~ exp(-N^2 f); DT shares the 20V value."""
    validate_domain(params)
    eta = params.eta
    if params.model == ModelKind.SIXV:
        return _f_sixv(params.u - params.v, eta, params.rho)
    if params.model == ModelKind.SIXVP:
        return _on_domain(lambda u, v: _f_sixvp(u, v, eta, params.rho_o, params.rho_e), params)
    return _on_domain(lambda u, v: _f_twentyv(u, v, eta, params.nu), params)


# -- one-point exponents ------------------------------------------------------------

def _psi_sixv(w, eta, xi):
    al = _alpha(eta)
    top = sin(al * xi) * sin(al * (w - eta)) * sin(w - xi + eta) * sin(w - xi - eta)
    bottom = al * sin(al * (w - xi - eta)) * sin(xi) * sin(w + eta) * sin(w - eta)
    return -log(top / bottom)


def _phi_sixv(w, eta, xi):
    al = _alpha(eta)
    top = sin(al * xi) * sin(al * (w - eta)) * sin(w - xi - eta)
    bottom = al * sin(xi) * sin(w - eta) * sin(al * (w - xi - eta))
    return -log(top / bottom)


def _alpha_block(u, v, eta, xi):
    """The alpha-dependent factor shared by the 6V' and 20V exponents."""
    al = _alpha(eta)
    a, b = u - v, u + v
    top = sin(al * xi) * sin(al * (xi + 2 * v + 2 * eta)) * sin(al * (a - eta)) * sin(al * (b + eta))
    bottom = (
        al
        * sin(xi)
        * sin(2 * al * (v + eta))
        * sin(al * (a - xi - eta))
        * sin(al * (b + xi + eta))
    )
    return top / bottom


def _psi_sixvp(u, v, eta, xi):
    al = _alpha(eta)
    a, b = u - v, u + v
    first = sin(al * (a - eta)) * sin(al * (b + eta)) * sin(al * xi) * sin(al * (xi + 2 * v + 2 * eta)) / (
        al * sin(2 * al * (v + eta)) * sin(al * (a - xi - eta)) * sin(al * (b + xi + eta))
    )
    second = (
        sin(2 * v) * sin(a - xi + eta) * sin(a - xi - eta) * sin(b + xi - eta) * sin(b + xi + eta)
    ) / (
        sin(xi) * sin(xi + 2 * v) * sin(a + eta) * sin(a - eta) * sin(b - eta) * sin(b + eta)
    )
    return -log(first * second)


def _phi_sixvp(u, v, eta, xi):
    a, b = u - v, u + v
    edge = sin(2 * v) * sin(a - xi - eta) * sin(b + xi + eta) / (
        sin(2 * v + xi) * sin(a - eta) * sin(b + eta)
    )
    return -log(edge * _alpha_block(u, v, eta, xi))


def _phi_twentyv(u, v, eta, xi):
    a, b = u - v, u + v
    edge = (
        sin(2 * v) * sin(a - xi - eta) ** 2 * sin(b + xi + eta) * sin(a + eta)
    ) / (
        sin(2 * v + xi) * sin(a - eta) ** 2 * sin(b + eta) * sin(a - xi + eta)
    )
    return -log(edge * _alpha_block(u, v, eta, xi))


def _omega0_ratio(u, v, eta, xi):
    a, b = u - v, u + v
    return sin(a - xi + eta) * sin(eta - b - xi) / (sin(a + eta) * sin(eta - b))


def _psi_twentyv(u, v, eta, xi):
    return _phi_twentyv(u, v, eta, xi) - 2 * log(_omega0_ratio(u, v, eta, xi))


_EXPONENTS = {
    (ModelKind.SIXVP, ExponentKind.PSI): _psi_sixvp,
    (ModelKind.SIXVP, ExponentKind.PHI): _phi_sixvp,
    (ModelKind.TWENTYV, ExponentKind.PSI): _psi_twentyv,
    (ModelKind.TWENTYV, ExponentKind.PHI): _phi_twentyv,
}


def one_point_exponent(params: ModelParams, xi, kind=ExponentKind.PSI):
    """psi (H_N ~ exp(-N psi)) or phi (the exponent in the variable t)."""
    validate_domain(params)
    kind = ExponentKind(kind)
    eta = params.eta
    if params.model == ModelKind.SIXV:
        fn = _psi_sixv if kind == ExponentKind.PSI else _phi_sixv
        return fn(params.u - params.v, eta, xi)
    model = ModelKind.TWENTYV if params.model == ModelKind.DT else params.model
    fn = _EXPONENTS[(model, kind)]
    return _on_domain(lambda u, v: fn(u, v, eta, xi), params)


def exponent_set(params: ModelParams, xi) -> ExponentSet:
    return ExponentSet(
        f=free_energy(params),
        psi=one_point_exponent(params, xi, ExponentKind.PSI),
        phi=one_point_exponent(params, xi, ExponentKind.PHI),
    )


def reduced_exponent(params: ModelParams, xi):
    """exp(psi) of the reduced one-point function (signed)."""
    validate_domain(params)
    if params.model == ModelKind.SIXV:
        return _reduced_sixv(params.u, params.v, params.eta, xi)
    if params.model == ModelKind.SIXVP:
        return _reduced_sixvp(params.u, params.v, params.eta, xi)
    raise ArgumentError("reduced one-point exponents exist for 6v and 6vp")


def _reduced_sixv(u, v, eta, xi):
    al = _alpha(eta)
    return al * sin(al * (u - v - xi - eta)) / (sin(al * xi) * sin(al * (u - v - eta)))


def _reduced_sixvp(u, v, eta, xi):
    al = _alpha(eta)
    a, b = u - v, u + v
    return (
        al * sin(2 * al * (v + eta)) * sin(al * (a - xi - eta)) * sin(al * (b + xi + eta))
    ) / (
        sin(al * (a - eta)) * sin(al * (b + eta)) * sin(al * xi) * sin(al * (xi + 2 * v + 2 * eta))
    )


def t_param(params: ModelParams, xi):
    """The generating variable t[xi] of the refined one-point functions."""
    u, v, eta = params.u, params.v, params.eta
    if params.model == ModelKind.SIXV:
        w = u - v
        return sin(w - xi - eta) / sin(w - xi + eta)
    a, b = u - v, u + v
    return sin(a - xi - eta) * sin(b + xi + eta) / (sin(a - xi + eta) * sin(b + xi - eta))


# -- Liouville / Wronskian checks ----------------------------------------------------

def w_function(u, v, eta, model: ModelKind):
    """W = exp(f) of the leading determinant asymptotics."""
    al = _alpha(eta)
    if model == ModelKind.SIXV:
        return sin(al * (u - v - eta)) / al
    return sin(al * (u - v - eta)) * sin(al * (-u - v - eta)) / (
        al * _sqrt_abs(sin(2 * al * u) * sin(2 * al * (v + eta)))
    )


def liouville_sign(u, v, eta, model: ModelKind) -> int:
    """Right-hand side of W W_uv - W_u W_v: the sign of g'(u) h'(v)."""
    if model == ModelKind.SIXV:
        return 1
    al = _alpha(innermost(eta))
    product = mp.sin(2 * al * innermost(u)) * mp.sin(2 * al * (innermost(v) + innermost(eta)))
    return 1 if product > 0 else -1


def liouville_residuals(params: ModelParams, xi=None) -> tuple:
    """
    (W W_uv - W_u W_v - sign, d_u psi - sign exp(-2f - psi)) with the reduced
    exponent; derivatives by dual propagation. On a removable line the
    identities are evaluated at a point displaced off it.
    """
    validate_domain(params)
    if params.model not in (ModelKind.SIXV, ModelKind.SIXVP):
        raise ArgumentError("Liouville residuals are defined for 6v and 6vp")
    model = params.model
    eta = params.eta
    xi = mpf(default_residual_xi(params) if xi is None else xi)
    dirs = singular_directions(params)
    u, v = displaced((params.u, params.v), dirs) if any(dirs) else (params.u, params.v)
    sign = liouville_sign(u, v, eta, model)

    w, wu, wv, wuv = mixed_derivatives(lambda x, y: w_function(x, y, eta, model), u, v)
    wronskian = w * wuv - wu * wv - sign

    reduced = _reduced_sixv if model == ModelKind.SIXV else _reduced_sixvp
    e, e_u = derivative(lambda x: reduced(x, v, eta, xi), u)
    ode = e_u / e - sign / (w ** 2 * e)
    logger.debug(f"liouville residuals {mp.nstr(wronskian, 5)}, {mp.nstr(ode, 5)}")
    return abs(wronskian), abs(ode)
