"""
Boltzmann weights, parameter domains and named combinatorial points.
"""

import logging

from mpmath import mp, mpf

from arctic.core.errors import ArgumentError
from arctic.core.trig_core import innermost, sin, sqrt
from arctic.schemas.models import ModelKind, ModelParams, NamedPoint, WeightTable

logger = logging.getLogger(__name__)


def make_params(model, eta, u, v, rho=1, rho_o=1, rho_e=1, nu=1) -> ModelParams:
    return ModelParams(
        model=ModelKind(model),
        eta=mpf(eta),
        u=mpf(u),
        v=mpf(v),
        rho=mpf(rho),
        rho_o=mpf(rho_o),
        rho_e=mpf(rho_e),
        nu=mpf(nu),
    )


def validate_domain(params: ModelParams) -> ModelParams:
    """Raise ArgumentError unless params lie in the open disordered domain."""
    eta, u, v = (innermost(x) for x in (params.eta, params.u, params.v))
    pi = mp.pi
    if not 0 < eta < pi / 2:
        raise ArgumentError(f"eta={mp.nstr(eta, 10)} outside (0, pi/2)")
    if not eta < u - v < pi - eta:
        raise ArgumentError(f"u-v={mp.nstr(u - v, 10)} outside (eta, pi-eta)")
    if params.model in (ModelKind.SIXVP, ModelKind.TWENTYV, ModelKind.DT):
        if not eta - pi < u + v < -eta:
            raise ArgumentError(f"u+v={mp.nstr(u + v, 10)} outside (eta-pi, -eta)")
    if params.model in (ModelKind.TWENTYV, ModelKind.DT):
        if not 0 < u < pi / 2 - eta:
            raise ArgumentError(f"u={mp.nstr(u, 10)} outside (0, pi/2-eta)")
    if params.model == ModelKind.DT and not is_uniform_point(params):
        raise ArgumentError("domino tilings are defined at the uniform 20V point only")
    for name in ("rho", "rho_o", "rho_e", "nu"):
        if not innermost(getattr(params, name)) > 0:
            raise ArgumentError(f"{name} must be positive")
    return params


def is_uniform_point(params: ModelParams) -> bool:
    tol = mpf(2) ** (-(mp.prec // 2))
    pi = mp.pi
    return (
        abs(innermost(params.eta) - pi / 8) < tol
        and abs(innermost(params.u) - pi / 8) < tol
        and abs(innermost(params.v) + pi / 2) < tol
        and abs(innermost(params.nu) - sqrt(mpf(2))) < tol
    )


def six_vertex_weights(params: ModelParams, xi=0) -> WeightTable:
    w = params.u - params.v - xi
    eta = params.eta
    return WeightTable(
        model=ModelKind.SIXV,
        a=params.rho * sin(w + eta),
        b=params.rho * sin(w - eta),
        c=params.rho * sin(2 * eta),
    )


def six_vertex_prime_weights(params: ModelParams, xi=0) -> WeightTable:
    u, v, eta = params.u, params.v + xi, params.eta
    return WeightTable(
        model=ModelKind.SIXVP,
        a_o=params.rho_o * sin(u - v + eta),
        b_o=params.rho_o * sin(u - v - eta),
        c_o=params.rho_o * sin(2 * eta),
        a_e=params.rho_e * sin(eta - u - v),
        b_e=params.rho_e * sin(-u - v - eta),
        c_e=params.rho_e * sin(2 * eta),
    )


def twenty_vertex_weights(params: ModelParams, xi=0) -> WeightTable:
    """omega_0 .. omega_6 of the triangular-lattice ice model."""
    u, v, eta, nu = params.u, params.v + xi, params.eta, params.nu
    s1 = sin(u - v + eta)
    s2 = sin(u - v - eta)
    t1 = sin(eta - u - v)
    t2 = sin(-u - v - eta)
    big = sin(2 * u + 2 * eta)
    q = sin(2 * eta)
    r = sin(2 * u)
    omega = [
        s1 * t1 * big,
        s2 * t2 * big,
        s2 * big * q,
        q ** 3 + s1 * t2 * r,
        big * t1 * q,
        s2 * t1 * q,
        s2 * t1 * r,
    ]
    return WeightTable(model=ModelKind.TWENTYV, omega=[nu * w for w in omega])


def weight_table(params: ModelParams, xi=0) -> WeightTable:
    if params.model == ModelKind.SIXV:
        return six_vertex_weights(params, xi)
    if params.model == ModelKind.SIXVP:
        return six_vertex_prime_weights(params, xi)
    return twenty_vertex_weights(params, xi)


def unit_weights(model: ModelKind) -> WeightTable:
    """All weights equal to the integer 1, for exact counting."""
    model = ModelKind(model)
    if model == ModelKind.SIXV:
        return WeightTable(model=model, a=1, b=1, c=1)
    if model == ModelKind.SIXVP:
        return WeightTable(model=model, a_o=1, b_o=1, c_o=1, a_e=1, b_e=1, c_e=1)
    return WeightTable(model=ModelKind.TWENTYV, omega=[1] * 7)


# -- named points ---------------------------------------------------------------

def _point(name: str, label: str, params: ModelParams) -> NamedPoint:
    return NamedPoint(name=name, label=label, params=params)


def asm_point() -> NamedPoint:
    eta = mp.pi / 6
    return _point("asm", "ASM", make_params("6v", eta, mp.pi / 2, 0, rho=1 / mp.cos(eta)))


def tau_asm_point(eta) -> NamedPoint:
    eta = mpf(eta)
    return _point("tau_asm", "tau-ASM", make_params("6v", eta, mp.pi / 2, 0, rho=1 / mp.cos(eta)))


def vsasm_point() -> NamedPoint:
    eta = mp.pi / 6
    rho = 1 / mp.cos(eta)
    return _point("vsasm", "VSASM", make_params("6vp", eta, 0, -mp.pi / 2, rho_o=rho, rho_e=rho))


def tau_vsasm_point(eta) -> NamedPoint:
    eta = mpf(eta)
    rho = 1 / mp.cos(eta)
    return _point("tau_vsasm", "tau-VSASM", make_params("6vp", eta, 0, -mp.pi / 2, rho_o=rho, rho_e=rho))


def twentyv_dwbc12_point() -> NamedPoint:
    return _point(
        "20v_dwbc12",
        "20V-DWBC1,2",
        make_params("6v", mp.pi / 8, 5 * mp.pi / 8, 0, rho=mp.sqrt(2)),
    )


def twentyv_dwbc3_point() -> NamedPoint:
    root2 = mp.sqrt(2)
    return _point(
        "20v_dwbc3",
        "20V-DWBC3",
        make_params("6vp", mp.pi / 8, mp.pi / 8, -mp.pi / 2, rho_o=root2, rho_e=root2),
    )


def uniform_20v_point() -> NamedPoint:
    return _point(
        "uniform",
        "20V-DWBC3 uniform",
        make_params("20v", mp.pi / 8, mp.pi / 8, -mp.pi / 2, nu=mp.sqrt(2)),
    )


def domino_point() -> NamedPoint:
    return _point(
        "dt",
        "Aztec triangle",
        make_params("dt", mp.pi / 8, mp.pi / 8, -mp.pi / 2, nu=mp.sqrt(2)),
    )


def free_fermion_6vp_point() -> NamedPoint:
    return _point(
        "free_fermion",
        "free-fermion",
        make_params("6vp", mp.pi / 4, mp.pi / 16, -5 * mp.pi / 8),
    )


NAMED_POINTS = {
    "asm": asm_point,
    "vsasm": vsasm_point,
    "20v_dwbc12": twentyv_dwbc12_point,
    "20v_dwbc3": twentyv_dwbc3_point,
    "uniform": uniform_20v_point,
    "dt": domino_point,
    "free_fermion": free_fermion_6vp_point,
}

TAU_POINTS = {
    "tau_asm": tau_asm_point,
    "tau_vsasm": tau_vsasm_point,
}


def named_point(name: str, eta=None) -> NamedPoint:
    key = name.lower().replace("-", "_")
    if key in TAU_POINTS:
        if eta is None:
            raise ArgumentError(f"named point {name} needs an explicit eta")
        return TAU_POINTS[key](eta)
    if key not in NAMED_POINTS:
        raise ArgumentError(f"unknown named point {name}")
    return NAMED_POINTS[key]()
