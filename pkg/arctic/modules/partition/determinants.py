"""
Homogeneous-limit determinants of the 6V and 6V' kernels.

Entries are scaled as m^(i+j)/(i! j!), which equals the raw derivative
determinant divided by prod (i!)^2. The bordered variant replaces the last
column with the kernel at the shifted spectral parameter and yields the
reduced one-point function, which behaves like xi^(n-1) near xi = 0.
"""

import logging
from math import factorial

from mpmath import mp, mpf

from arctic.core.config import precision_for, working_precision
from arctic.core.errors import ArgumentError
from arctic.core.trig_core import cos, determinant, m_derivatives, sin
from arctic.schemas.models import ModelKind, ModelParams

logger = logging.getLogger(__name__)

CLASSICAL = "classical"
FREE_FERMION = "free_fermion"


def _inverse_factorials(n: int) -> list:
    return [1 / mpf(factorial(i)) for i in range(n)]


def sixv_matrix(w, eta, n: int) -> list:
    d = m_derivatives(w, eta, 2 * n - 2)
    inv = _inverse_factorials(n)
    return [[d[i + j] * inv[i] * inv[j] for j in range(n)] for i in range(n)]


def sixvp_matrix(u, v, eta, n: int) -> list:
    dm = m_derivatives(u - v, eta, 2 * n - 2)
    dp = m_derivatives(u + v, eta, 2 * n - 2)
    inv = _inverse_factorials(n)
    return [
        [(dm[i + j] - (-1) ** j * dp[i + j]) * inv[i] * inv[j] for j in range(n)]
        for i in range(n)
    ]


def sixv_delta(w, eta, n: int):
    if n == 0:
        return mpf(1)
    with working_precision(precision_for(n)):
        return determinant(sixv_matrix(w, eta, n))


def sixvp_delta(u, v, eta, n: int):
    if n == 0:
        return mpf(1)
    with working_precision(precision_for(n)):
        return determinant(sixvp_matrix(u, v, eta, n))


def sixv_reduced_one_point(w, eta, n: int, xi):
    with working_precision(precision_for(n)):
        matrix = sixv_matrix(w, eta, n)
        border = m_derivatives(w - xi, eta, n - 1)
        inv = _inverse_factorials(n)
        for i in range(n):
            matrix[i][n - 1] = border[i] * inv[i]
        return (-1) ** (n - 1) * determinant(matrix) / sixv_delta(w, eta, n)


def sixvp_reduced_one_point(u, v, eta, n: int, xi):
    with working_precision(precision_for(n)):
        matrix = sixvp_matrix(u, v, eta, n)
        minus = m_derivatives(u - v - xi, eta, n - 1)
        plus = m_derivatives(u + v + xi, eta, n - 1)
        inv = _inverse_factorials(n)
        for i in range(n):
            matrix[i][n - 1] = (minus[i] - plus[i]) * inv[i]
        return (-1) ** (n - 1) * determinant(matrix) / sixvp_delta(u, v, eta, n)


def delta(params: ModelParams, n: int, precision: int = None):
    """Delta_n[u-v] for SIXV, Delta_n[u, v] for SIXVP."""
    if n < 0:
        raise ArgumentError(f"n must be non-negative, got {n}")
    with working_precision(precision or precision_for(n)):
        if params.model == ModelKind.SIXV:
            return sixv_delta(params.u - params.v, params.eta, n)
        if params.model == ModelKind.SIXVP:
            return sixvp_delta(params.u, params.v, params.eta, n)
    raise ArgumentError(f"delta is defined for 6v and 6vp, not {params.model.value}")


def delta_closed_form(case: str, u, v, n: int):
    """Closed forms of Delta_n[u, v] at eta = 0 and at eta = pi/4."""
    if n < 1:
        raise ArgumentError(f"n must be positive, got {n}")
    with working_precision(precision_for(n)):
        half = n * (n + 1) // 2
        if case == CLASSICAL:
            ratio = sin(2 * u) * sin(2 * v) / (sin(u - v) ** 2 * sin(u + v) ** 2)
            return factorial(n) * ratio ** half
        if case == FREE_FERMION:
            # -cos2u cos2v > 0 on the eta = pi/4 domain
            top = (4 * sin(2 * u) * sin(2 * v)) ** half * (-4 * cos(2 * u) * cos(2 * v)) ** (half - n)
            bottom = (cos(2 * (u - v)) * cos(2 * (u + v))) ** (n * n)
            if bottom == 0:
                raise ArgumentError("free-fermion closed form has a pole here")
            return top / bottom
    raise ArgumentError(f"unknown closed-form case {case}")


def free_fermion_delta_check(u, v, n: int):
    """Relative gap between the pi/4 determinant and its closed form."""
    with working_precision(precision_for(n)):
        value = sixvp_delta(mpf(u), mpf(v), mp.pi / 4, n)
        closed = delta_closed_form(FREE_FERMION, mpf(u), mpf(v), n)
        return abs(value - closed) / abs(closed)
