"""
Multiprecision kernel shared by every other module.

- MPScalar values are mpmath ``mpf`` numbers; precision follows ``mp.prec``
  and is raised locally through ``working_precision``.
- ``Dual`` implements forward-mode differentiation; duals nest, so second and
  mixed derivatives come from a dual whose primal is itself a dual.
- The kernel m(x) = 1/(sin(x+eta) sin(x-eta)) and all its derivatives are
  evaluated exactly through integer polynomials in cot.
"""

import logging
from itertools import zip_longest
from typing import Callable, Sequence, Tuple

from mpmath import mp, mpf

from arctic.core.config import GUARD_STEP_BITS, working_precision
from arctic.core.errors import ArgumentError, SingularityError
from arctic.schemas.models import DerivTower

logger = logging.getLogger(__name__)

SINGULAR_THRESHOLD_BITS = 60


class Dual:
    """Value with one tangent per differentiation direction."""

    __slots__ = ("primal", "tangents")

    def __init__(self, primal, tangents: Sequence = ()):
        self.primal = primal
        self.tangents = tuple(tangents)

    def __repr__(self):
        return f"Dual({self.primal!r}, {self.tangents!r})"

    @staticmethod
    def _split(other):
        if isinstance(other, Dual):
            return other.primal, other.tangents
        return other, ()

    def __neg__(self):
        return Dual(-self.primal, tuple(-t for t in self.tangents))

    def __pos__(self):
        return self

    def __add__(self, other):
        p, ts = self._split(other)
        return Dual(
            self.primal + p,
            tuple(a + b for a, b in zip_longest(self.tangents, ts, fillvalue=0)),
        )

    __radd__ = __add__

    def __sub__(self, other):
        p, ts = self._split(other)
        return Dual(
            self.primal - p,
            tuple(a - b for a, b in zip_longest(self.tangents, ts, fillvalue=0)),
        )

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        p, ts = self._split(other)
        if not ts:
            return Dual(self.primal * p, tuple(t * p for t in self.tangents))
        return Dual(
            self.primal * p,
            tuple(
                self.primal * b + p * a
                for a, b in zip_longest(self.tangents, ts, fillvalue=0)
            ),
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Dual):
            return self * reciprocal(other)
        if other == 0:
            raise SingularityError("division of a dual number by zero")
        return Dual(self.primal / other, tuple(t / other for t in self.tangents))

    def __rtruediv__(self, other):
        return reciprocal(self) * other

    def __pow__(self, k):
        if isinstance(k, Dual):
            return exp(log(self) * k)
        if k == 0:
            return Dual(self.primal ** 0, tuple(0 * t for t in self.tangents))
        scale = k * self.primal ** (k - 1)
        return Dual(self.primal ** k, tuple(scale * t for t in self.tangents))


def reciprocal(x):
    if isinstance(x, Dual):
        r = reciprocal(x.primal)
        d = -(r * r)
        return Dual(r, tuple(d * t for t in x.tangents))
    if x == 0:
        raise SingularityError("reciprocal of zero")
    return 1 / mpf(x) if isinstance(x, int) else 1 / x


def _lift(x, scalar_fn: Callable, derivative: Callable):
    if isinstance(x, Dual):
        d = derivative(x.primal)
        return Dual(scalar_fn(x.primal), tuple(d * t for t in x.tangents))
    return scalar_fn(x)


def _scalar_cot(x):
    s = mp.sin(x)
    if s == 0:
        raise SingularityError(f"cot pole at {mp.nstr(x, 15)}")
    return mp.cos(x) / s


def _scalar_log(x):
    if x == 0:
        raise SingularityError("log of zero")
    return mp.log(abs(x))


def sin(x):
    return _lift(x, lambda p: sin(p) if isinstance(p, Dual) else mp.sin(p), cos)


def cos(x):
    return _lift(x, lambda p: cos(p) if isinstance(p, Dual) else mp.cos(p), lambda p: -sin(p))


def cot(x):
    def value(p):
        return cot(p) if isinstance(p, Dual) else _scalar_cot(p)

    def derivative(p):
        c = cot(p)
        return -(1 + c * c)

    return _lift(x, value, derivative)


def tan(x):
    return sin(x) / cos(x)


def log(x):
    """Real logarithm of |x|; the derivative is x'/x on either sign."""
    return _lift(
        x,
        lambda p: log(p) if isinstance(p, Dual) else _scalar_log(p),
        reciprocal,
    )


def exp(x):
    return _lift(x, lambda p: exp(p) if isinstance(p, Dual) else mp.exp(p), exp)


def sqrt(x):
    def value(p):
        if isinstance(p, Dual):
            return sqrt(p)
        if p < 0:
            raise ArgumentError("square root of a negative value")
        return mp.sqrt(p)

    return _lift(x, value, lambda p: reciprocal(2 * sqrt(p)))


def innermost(x):
    """Innermost scalar of a (possibly nested) dual."""
    while isinstance(x, Dual):
        x = x.primal
    return x


def magnitude(x):
    return abs(innermost(x))


def is_zero(x) -> bool:
    if isinstance(x, Dual):
        return is_zero(x.primal) and all(is_zero(t) for t in x.tangents)
    return x == 0


# -- derivative handles --------------------------------------------------------

def variable(x, direction: int = 0, directions: int = 1) -> Dual:
    tangents = [0] * directions
    tangents[direction] = 1
    return Dual(x, tangents)


def derivative(fn: Callable, x) -> Tuple:
    """(f(x), f'(x)) by one forward pass."""
    out = fn(Dual(x, (1,)))
    if not isinstance(out, Dual):
        return out, mpf(0)
    return out.primal, (out.tangents[0] if out.tangents else mpf(0))


def second_derivative(fn: Callable, x) -> Tuple:
    """(f, f', f'') through a dual nested in a dual."""
    point = Dual(Dual(x, (1,)), (Dual(1, (0,)),))
    out = fn(point)
    inner = out.primal
    outer = out.tangents[0]
    value = inner.primal if isinstance(inner, Dual) else inner
    first = outer.primal if isinstance(outer, Dual) else outer
    second = outer.tangents[0] if isinstance(outer, Dual) and outer.tangents else mpf(0)
    return value, first, second


def mixed_derivatives(fn: Callable, x, y) -> Tuple:
    """(f, f_x, f_y, f_xy) for a function of two arguments."""
    px = Dual(Dual(x, (0,)), (Dual(1, (0,)),))
    py = Dual(Dual(y, (1,)), (Dual(0, (0,)),))
    out = fn(px, py)
    inner = out.primal
    outer = out.tangents[0]
    value = inner.primal
    fy = inner.tangents[0] if inner.tangents else mpf(0)
    fx = outer.primal if isinstance(outer, Dual) else outer
    fxy = outer.tangents[0] if isinstance(outer, Dual) and outer.tangents else mpf(0)
    return value, fx, fy, fxy


# -- cot derivative tower -------------------------------------------------------

def cot_derivative_polynomials(k_max: int) -> DerivTower:
    """
    Integer coefficient lists (lowest degree first) of P_0..P_k_max with
    d^j/dx^j cot(x) = P_j(cot x).
    """
    if k_max < 0:
        raise ArgumentError(f"k_max must be non-negative, got {k_max}")
    polys = [[0, 1]]
    for _ in range(k_max):
        prev = polys[-1]
        deriv = [(i + 1) * prev[i + 1] for i in range(len(prev) - 1)]
        nxt = [0] * (len(deriv) + 2)
        for i, coeff in enumerate(deriv):
            nxt[i] -= coeff
            nxt[i + 2] -= coeff
        polys.append(nxt)
    return DerivTower(polys=polys)


def evaluate_polynomial(coeffs: Sequence[int], c):
    acc = 0
    for coeff in reversed(coeffs):
        acc = acc * c + coeff
    return acc


def m_derivatives(w, eta, k_max: int, precision: int = None) -> list:
    """
    Entry k is d^k/dw^k [1/(sin(w+eta) sin(w-eta))].

    For eta = 0 the kernel degenerates to 1/sin^2 w, whose derivatives are
    -P_{k+1}(cot w).
    """
    from arctic.core.cache_store import get_tower

    with working_precision(precision or mp.prec):
        if is_zero(eta):
            tower = get_tower(k_max + 1)
            c = cot(w)
            return [-evaluate_polynomial(tower.polys[k + 1], c) for k in range(k_max + 1)]
        tower = get_tower(k_max)
        s2 = sin(2 * eta)
        if magnitude(s2) == 0:
            raise SingularityError("sin(2 eta) vanishes")
        c_minus = cot(w - eta)
        c_plus = cot(w + eta)
        return [
            (evaluate_polynomial(tower.polys[k], c_minus) - evaluate_polynomial(tower.polys[k], c_plus)) / s2
            for k in range(k_max + 1)
        ]


def mU_derivative_matrix(u, v, eta, n: int, precision: int = None) -> list:
    """Entry (i, j) is (-1)^j d_u^i d_v^j [m(u-v) - m(u+v)]."""
    if n < 1:
        raise ArgumentError(f"matrix size must be positive, got {n}")
    with working_precision(precision or mp.prec):
        minus = m_derivatives(u - v, eta, 2 * n - 2)
        plus = m_derivatives(u + v, eta, 2 * n - 2)
        return [
            [minus[i + j] - (-1) ** j * plus[i + j] for j in range(n)]
            for i in range(n)
        ]


# -- dense linear algebra ------------------------------------------------------

def determinant(matrix: Sequence[Sequence]):
    """LU determinant with partial pivoting; entries may be duals."""
    n = len(matrix)
    if n == 0:
        return mpf(1)
    a = [list(row) for row in matrix]
    det = 1
    for col in range(n):
        pivot_row = max(range(col, n), key=lambda r: magnitude(a[r][col]))
        if magnitude(a[pivot_row][col]) == 0:
            return mpf(0)
        if pivot_row != col:
            a[col], a[pivot_row] = a[pivot_row], a[col]
            det = -det
        pivot = a[col][col]
        det = det * pivot
        inv = reciprocal(pivot)
        for r in range(col + 1, n):
            factor = a[r][col] * inv
            if is_zero(factor):
                continue
            row = a[r]
            prow = a[col]
            for c in range(col + 1, n):
                row[c] = row[c] - factor * prow[c]
    return det


# -- removable singular lines ----------------------------------------------------

def near_singular(x) -> bool:
    """True when sin(2x) is below the guard threshold."""
    return magnitude(sin(2 * innermost(x))) < mpf(2) ** (-SINGULAR_THRESHOLD_BITS) * mp.pi


def symmetric_limit(fn: Callable, point: Sequence, directions: Sequence[int], step_bits: int = None):
    """
    Value of fn at point when fn is analytic there but not directly
    evaluable: averages fn(point +- h d) and removes the h^2 and h^4 terms by
    Richardson extrapolation over h, h/2, h/4.
    """
    step = mpf(2) ** (-(step_bits or GUARD_STEP_BITS))

    def averaged(h):
        plus = [p + h * d for p, d in zip(point, directions)]
        minus = [p - h * d for p, d in zip(point, directions)]
        return (fn(*plus) + fn(*minus)) / 2

    g0, g1, g2 = averaged(step), averaged(step / 2), averaged(step / 4)
    r0 = (4 * g1 - g0) / 3
    r1 = (4 * g2 - g1) / 3
    logger.debug(f"symmetric limit at step 2^-{step_bits or GUARD_STEP_BITS}")
    return (16 * r1 - r0) / 15


def displaced(point: Sequence, directions: Sequence[int], step_bits: int = None) -> list:
    step = mpf(2) ** (-(step_bits or GUARD_STEP_BITS))
    return [p + step * d for p, d in zip(point, directions)]
