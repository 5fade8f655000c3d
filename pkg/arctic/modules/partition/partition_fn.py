"""
Partition functions, semi-homogeneous partition functions and one-point
functions for the 6V, 6V', 20V and domino models, plus the recursion
residuals and the refined sum rules tying them to enumeration data.
"""

import logging
from math import factorial

from mpmath import mp, mpf

from arctic.core.config import guard_bits, precision_for, working_precision
from arctic.core.errors import ArgumentError
from arctic.core.trig_core import (
    derivative,
    displaced,
    log,
    mixed_derivatives,
    near_singular,
    second_derivative,
    sin,
    symmetric_limit,
)
from arctic.modules.partition.determinants import (
    sixv_delta,
    sixv_reduced_one_point,
    sixvp_delta,
    sixvp_reduced_one_point,
)
from arctic.modules.partition.weights import validate_domain, weight_table
from arctic.schemas.models import ModelKind, ModelParams, RefinedCounts

logger = logging.getLogger(__name__)


def singular_directions(params: ModelParams) -> tuple:
    """Unit displacement along each coordinate sitting on a removable line."""
    if params.model == ModelKind.SIXV:
        return (0, 0)
    return (1 if near_singular(params.u) else 0, 1 if near_singular(params.v) else 0)


def _guarded(fn, params: ModelParams, n: int):
    """fn(u, v) at params, through a symmetric limit on singular lines."""
    dirs = singular_directions(params)
    if not any(dirs):
        with working_precision(precision_for(n)):
            return fn(params.u, params.v)
    bits = precision_for(n) + guard_bits(n + 1, sum(dirs))
    logger.debug(f"guarded limit along {dirs} at {bits} bits")
    with working_precision(bits):
        value = symmetric_limit(fn, (params.u, params.v), dirs)
    return +value


# -- raw formulas, usable with dual arguments -------------------------------------

def _sixv_partition(w, eta, rho, n: int):
    d = sixv_delta(w, eta, n)
    return sin(2 * eta) ** n * d * (rho * sin(w + eta) * sin(w - eta)) ** (n * n)


def _six_product(u, v, eta):
    return sin(u - v + eta) * sin(u - v - eta) * sin(u + v + eta) * sin(u + v - eta)


def _sixvp_partition(u, v, eta, rho_o, rho_e, n: int):
    d = sixvp_delta(u, v, eta, n)
    return (
        rho_e ** (n * n - n)
        * rho_o ** (n * n)
        * sin(2 * eta) ** n
        * d
        * _six_product(u, v, eta) ** (n * n)
        / (sin(2 * u) * sin(2 * v)) ** (n * (n + 1) // 2)
    )


def _twentyv_factor(u, v, eta, nu, n: int):
    """Z^20V / Z^6V'(rho = 1)."""
    e = n * (3 * n - 1) // 2
    return (
        nu ** e
        * sin(2 * u + 2 * eta) ** e
        * sin(u - v - eta) ** (n * (n - 1) // 2)
        * sin(eta - u - v) ** (n * (n + 1) // 2)
    )


def _sixv_one_point(w, eta, n: int, xi):
    reduced = sixv_reduced_one_point(w, eta, n, xi)
    ratio = sin(w - xi + eta) * sin(w - xi - eta) / (sin(w + eta) * sin(w - eta))
    return reduced / sin(xi) ** (n - 1) * ratio ** n


def _sixvp_one_point(u, v, eta, n: int, xi):
    reduced = sixvp_reduced_one_point(u, v, eta, n, xi)
    ratio = _six_product(u, v + xi, eta) / _six_product(u, v, eta)
    return (
        reduced
        / sin(xi) ** (n - 1)
        * sin(xi + 2 * v) ** (1 - n)
        * sin(2 * v) ** n
        / sin(2 * xi + 2 * v)
        * ratio ** n
    )


def _twentyv_one_point(u, v, eta, n: int, xi):
    return (
        (sin(u - v - xi - eta) / sin(u - v - eta)) ** (n - 1)
        * (sin(eta - u - v - xi) / sin(eta - u - v)) ** n
        * _sixvp_one_point(u, v, eta, n, xi)
    )


# -- public operations ------------------------------------------------------------

def _check_size(n: int):
    if n < 1:
        raise ArgumentError(f"n must be at least 1, got {n}")


def _check_shift(params: ModelParams, xi):
    """The shifted last column v + xi must stay in the domain."""
    # DT only admits its uniform point, so the shift is checked on the 20V domain
    model = ModelKind.TWENTYV if params.model == ModelKind.DT else params.model
    shifted = params.model_copy(update={"model": model, "v": params.v + xi})
    try:
        validate_domain(shifted)
    except ArgumentError as e:
        raise ArgumentError(f"xi={mp.nstr(xi, 10)} moves the last column out of the domain: {e}") from e


def partition_fn(params: ModelParams, n: int):
    """Homogeneous partition function Z_n of the model."""
    _check_size(n)
    validate_domain(params)
    eta = params.eta
    if params.model == ModelKind.SIXV:
        with working_precision(precision_for(n)):
            value = _sixv_partition(params.u - params.v, eta, params.rho, n)
        return +value
    if params.model == ModelKind.SIXVP:
        return _guarded(
            lambda u, v: _sixvp_partition(u, v, eta, params.rho_o, params.rho_e, n),
            params,
            n,
        )
    return _guarded(
        lambda u, v: _sixvp_partition(u, v, eta, 1, 1, n) * _twentyv_factor(u, v, eta, params.nu, n),
        params,
        n,
    )


def one_point(params: ModelParams, n: int, xi):
    """H_n[xi] = Z_n[xi] / Z_n with the last column shifted by xi."""
    _check_size(n)
    validate_domain(params)
    xi = mpf(xi)
    if xi == 0:
        return mpf(1)
    _check_shift(params, xi)
    eta = params.eta
    if params.model == ModelKind.SIXV:
        with working_precision(precision_for(n)):
            value = _sixv_one_point(params.u - params.v, eta, n, xi)
        return +value
    if params.model == ModelKind.SIXVP:
        return _guarded(lambda u, v: _sixvp_one_point(u, v, eta, n, xi), params, n)
    return _guarded(lambda u, v: _twentyv_one_point(u, v, eta, n, xi), params, n)


def refined_partition(params: ModelParams, n: int, xi):
    """Semi-homogeneous Z_n[xi]; xi = 0 is the homogeneous value."""
    return partition_fn(params, n) * one_point(params, n, xi)


def default_residual_xi(params: ModelParams):
    if params.model == ModelKind.SIXV:
        return (params.u - params.v + params.eta - mp.pi) / 3
    return (params.eta + abs(params.u) - params.v - mp.pi) / 3


def recursion_residual(params: ModelParams, n: int, xi=None) -> tuple:
    """
    (Delta recursion residual, one-point relation residual) at size n.

    Derivatives are taken by dual propagation through the determinants.
    On a removable singular line the identities are checked at a point
    displaced off the line, where they hold exactly.
    """
    _check_size(n)
    validate_domain(params)
    xi = mpf(default_residual_xi(params) if xi is None else xi)
    eta = params.eta
    dirs = singular_directions(params)
    bits = precision_for(n + 1) + guard_bits(n + 1, sum(dirs))
    with working_precision(bits):
        u, v = displaced((params.u, params.v), dirs) if any(dirs) else (params.u, params.v)
        if params.model == ModelKind.SIXV:
            w = u - v
            _, _, d2 = second_derivative(lambda x: log(sixv_delta(x, eta, n)), w)
            ratio = sixv_delta(w, eta, n + 1) * sixv_delta(w, eta, n - 1) / sixv_delta(w, eta, n) ** 2
            r_delta = ratio - d2 / n ** 2
            _, dlog_h = derivative(lambda x: log(sixv_reduced_one_point(x, eta, n, xi)), w)
            h_ratio = sixv_reduced_one_point(w, eta, n + 1, xi) / sixv_reduced_one_point(w, eta, n, xi)
            r_one = h_ratio * ratio + dlog_h / n
        elif params.model == ModelKind.SIXVP:
            _, _, _, duv = mixed_derivatives(lambda x, y: log(sixvp_delta(x, y, eta, n)), u, v)
            ratio = sixvp_delta(u, v, eta, n + 1) * sixvp_delta(u, v, eta, n - 1) / sixvp_delta(u, v, eta, n) ** 2
            r_delta = ratio + duv / n ** 2
            _, dlog_h = derivative(lambda x: log(sixvp_reduced_one_point(x, v, eta, n, xi)), u)
            h_ratio = sixvp_reduced_one_point(u, v, eta, n + 1, xi) / sixvp_reduced_one_point(u, v, eta, n, xi)
            r_one = h_ratio * ratio + dlog_h / n
        else:
            raise ArgumentError("recursions are stated for the 6v and 6vp determinants")
    return +abs(r_delta), +abs(r_one)


# -- refined sum rules ---------------------------------------------------------------

def _ratio(after, before):
    return after / before


def refined_partition_from_counts(params: ModelParams, counts: RefinedCounts, xi):
    """
    Z_n[xi] rebuilt from refined counts taken with the homogeneous weights:
    only the last column feels the shift, and it carries one turning vertex.
    """
    n = counts.n
    with working_precision(precision_for(n)):
        base = weight_table(params)
        shifted = weight_table(params, xi)
        if params.model == ModelKind.SIXV:
            a_bar = _ratio(shifted.a, base.a)
            b_bar = _ratio(shifted.b, base.b)
            return sum(
                z * b_bar ** (k - 1) * a_bar ** (n - k)
                for k, z in enumerate(counts.by_exit, start=1)
            )
        if params.model == ModelKind.SIXVP:
            aa = _ratio(shifted.a_o, base.a_o) * _ratio(shifted.a_e, base.a_e)
            tau = _ratio(shifted.b_o, base.b_o) * _ratio(shifted.b_e, base.b_e) / aa
            sigma = _ratio(shifted.b_o, base.b_o) / _ratio(shifted.a_e, base.a_e)
            z = list(counts.by_exit) + [0]
            total = sum(
                tau ** (j - 1) * (z[2 * j - 2] + sigma * z[2 * j - 1])
                for j in range(1, n + 1)
            )
            return aa ** (n - 1) * total
        bars = [_ratio(s, b) for s, b in zip(shifted.omega, base.omega)]
        return sum(
            (bars[4] * zh + bars[2] * zd) * bars[0] ** (2 * n - k - 1) * bars[1] ** (k - 1)
            for k, (zh, zd) in enumerate(
                zip(counts.by_exit_horizontal, counts.by_exit_diagonal), start=1
            )
        )


def refined_one_point(params: ModelParams, counts: RefinedCounts) -> dict:
    """
    Refined one-point functions H_{n,k} from weighted refined counts.
    6V gives {"H": [...]}, 20V gives {"H_horizontal": [...], "H_diagonal": [...]}.
    """
    with working_precision(precision_for(counts.n)):
        weights = weight_table(params)
        total = counts.total
        if params.model == ModelKind.SIXV:
            return {
                "H": [
                    (weights.a / weights.b) ** (k - 1) * z / (weights.c * total)
                    for k, z in enumerate(counts.by_exit, start=1)
                ]
            }
        if params.model == ModelKind.TWENTYV:
            om = weights.omega
            scale = [(om[0] / om[1]) ** (k - 1) / total for k in range(1, len(counts.by_exit) + 1)]
            return {
                "H_horizontal": [s * z / om[4] for s, z in zip(scale, counts.by_exit_horizontal)],
                "H_diagonal": [s * z / om[2] for s, z in zip(scale, counts.by_exit_diagonal)],
            }
    raise ArgumentError("refined one-point functions are tabulated for 6v and 20v")


def one_point_from_refined(params: ModelParams, counts: RefinedCounts, xi):
    """Generating-series side of the refined one-point identity."""
    n = counts.n
    refined = refined_one_point(params, counts)
    with working_precision(precision_for(n)):
        u, v, eta = params.u, params.v, params.eta
        t = sin(u - v - xi - eta) * sin(u + v + xi + eta) / (
            sin(u - v - xi + eta) * sin(u + v + xi - eta)
        )
        if params.model == ModelKind.SIXV:
            w = u - v
            t = sin(w - xi - eta) / sin(w - xi + eta)
            a_bar = sin(w - xi + eta) / sin(w + eta)
            c = weight_table(params).c
            series = sum(t ** (k - 1) * h for k, h in enumerate(refined["H"], start=1))
            return series * c * a_bar ** (n - 1)
        shifted = weight_table(params, xi).omega
        base = weight_table(params).omega
        s = shifted[2] / shifted[4]
        series = sum(
            t ** (k - 1) * (hh + s * hd)
            for k, (hh, hd) in enumerate(
                zip(refined["H_horizontal"], refined["H_diagonal"]), start=1
            )
        )
        return shifted[4] * (shifted[0] / base[0]) ** (2 * n - 2) * series


# -- closed enumerations ---------------------------------------------------------------

def asm_count(n: int) -> int:
    num, den = 1, 1
    for j in range(n):
        num *= factorial(3 * j + 1)
        den *= factorial(n + j)
    return num // den


def vsasm_count(n: int) -> int:
    """Vertically symmetric ASMs of size 2n+1."""
    num, den = 1, 1
    for k in range(1, n + 1):
        num *= factorial(6 * k - 2) * factorial(2 * k - 1)
        den *= 2 * factorial(4 * k - 1) * factorial(4 * k - 2)
    return num // den


def twentyv_count(n: int) -> int:
    """Configurations of the 20V model with DWBC3, equal to Aztec-triangle tilings."""
    num, den = 2 ** (n * (n - 1) // 2), 1
    for i in range(n):
        num *= factorial(4 * i + 2)
        den *= factorial(n + 2 * i + 1)
    return num // den


def closed_counts(model, n: int) -> int:
    """Exact configuration count of the model at its uniform point."""
    model = ModelKind(model)
    if n < 1:
        raise ArgumentError(f"n must be at least 1, got {n}")
    if model == ModelKind.SIXV:
        return asm_count(n)
    if model == ModelKind.SIXVP:
        return vsasm_count(n)
    return twentyv_count(n)


def free_fermion_factor(params: ModelParams, n: int):
    """(-cos 2u cos 2v)^(n(n-1)/2), the 6V' partition function at eta = pi/4 without the rho powers."""
    return (-mp.cos(2 * params.u) * mp.cos(2 * params.v)) ** (n * (n - 1) // 2)
