"""
Unit tests for the multiprecision kernel.

Tests cover:
- Dual-number arithmetic and derivative handles
- Cot derivative tower and kernel derivatives
- Determinants and removable-singularity limits
- Working precision and error types
"""

import pytest
from mpmath import mp, mpf

from arctic.core.config import working_precision
from arctic.core.errors import ArgumentError, SingularityError
from arctic.core.trig_core import (
    Dual,
    cot,
    cot_derivative_polynomials,
    derivative,
    determinant,
    log,
    m_derivatives,
    mixed_derivatives,
    near_singular,
    reciprocal,
    second_derivative,
    sin,
    sqrt,
    symmetric_limit,
)


class TestDualNumbers:
    """Tests for forward-mode differentiation."""

    def test_derivative_of_sin_returns_cos(self):
        """Test that one dual pass gives (sin x, cos x)."""
        x = mpf("0.7")
        value, slope = derivative(sin, x)
        assert abs(value - mp.sin(x)) < mpf("1e-100")
        assert abs(slope - mp.cos(x)) < mpf("1e-100")

    def test_second_derivative_of_cube_returns_6x(self):
        """Test that nested duals give the second derivative."""
        value, first, second = second_derivative(lambda x: x ** 3, mpf(2))
        assert value == 8
        assert first == 12
        assert second == 12

    def test_mixed_derivatives_returns_all_four(self):
        """Test (f, f_x, f_y, f_xy) for f = x^2 y."""
        value, fx, fy, fxy = mixed_derivatives(lambda x, y: x * x * y, mpf(1), mpf(2))
        assert (value, fx, fy, fxy) == (2, 4, 1, 2)

    def test_quotient_rule_returns_expected_slope(self):
        """Test division of duals against the quotient rule."""
        x = Dual(mpf(3), (1,))
        out = 1 / (x * x)
        assert abs(out.primal - mpf(1) / 9) < mpf("1e-100")
        assert abs(out.tangents[0] + mpf(2) / 27) < mpf("1e-100")

    def test_log_of_negative_returns_log_of_magnitude(self):
        """Test that log works on |x| with derivative 1/x."""
        value, slope = derivative(log, mpf(-2))
        assert abs(value - mp.log(2)) < mpf("1e-100")
        assert abs(slope + mpf("0.5")) < mpf("1e-100")


class TestKernelErrors:
    """Tests for poles and invalid arguments."""

    def test_reciprocal_of_zero_raises_singularity(self):
        """Test that 1/0 raises SingularityError."""
        with pytest.raises(SingularityError):
            reciprocal(mpf(0))

    def test_cot_at_zero_raises_singularity(self):
        """Test that cot has a pole at 0."""
        with pytest.raises(SingularityError):
            cot(mpf(0))

    def test_sqrt_of_negative_raises_argument_error(self):
        """Test that real square roots reject negative input."""
        with pytest.raises(ArgumentError):
            sqrt(mpf(-1))

    def test_singularity_error_is_zero_division(self):
        """Test that callers can catch poles as ZeroDivisionError."""
        with pytest.raises(ZeroDivisionError):
            reciprocal(0)


class TestCotTower:
    """Tests for the integer cot derivative polynomials."""

    def test_first_polynomials_returns_known_coefficients(self):
        """Test P_0 = c, P_1 = -1 - c^2, P_2 = 2c + 2c^3."""
        polys = cot_derivative_polynomials(2).polys
        assert polys[0] == [0, 1]
        assert polys[1] == [-1, 0, -1]
        assert polys[2] == [0, 2, 0, 2]

    def test_negative_order_raises_argument_error(self):
        """Test that a negative order is rejected."""
        with pytest.raises(ArgumentError):
            cot_derivative_polynomials(-1)

    def test_kernel_value_returns_inverse_sine_product(self):
        """Test m(w) = 1/(sin(w+eta) sin(w-eta))."""
        w, eta = mpf("1.3"), mp.pi / 7
        expected = 1 / (mp.sin(w + eta) * mp.sin(w - eta))
        assert abs(m_derivatives(w, eta, 0)[0] - expected) < mpf("1e-100")

    def test_kernel_derivatives_match_dual_derivative(self):
        """Test the tower against a dual derivative of the kernel."""
        w, eta = mpf("1.3"), mp.pi / 7
        _, slope = derivative(lambda x: 1 / (sin(x + eta) * sin(x - eta)), w)
        assert abs(m_derivatives(w, eta, 3)[1] - slope) < mpf("1e-90")

    @pytest.mark.parametrize("eta", [mp.pi / 5, mpf(0)])
    def test_kernel_derivatives_match_central_differences(self, eta):
        """Test entries up to order 40 against central differences of the previous entry."""
        w = mpf("1.3")
        with working_precision(1024):
            h = mpf(2) ** -80
            exact = m_derivatives(w, eta, 40)
            right = m_derivatives(w + h, eta, 39)
            left = m_derivatives(w - h, eta, 39)
            for k in range(1, 41):
                central = (right[k - 1] - left[k - 1]) / (2 * h)
                assert abs(central - exact[k]) < mpf("1e-30") * abs(exact[k])

    def test_eta_zero_kernel_returns_inverse_sine_square(self):
        """Test the degenerate kernel 1/sin^2 w."""
        w = mpf("0.9")
        assert abs(m_derivatives(w, mpf(0), 0)[0] - 1 / mp.sin(w) ** 2) < mpf("1e-100")


class TestLinearAlgebra:
    """Tests for determinants and removable limits."""

    def test_determinant_2x2_returns_minus_two(self):
        """Test a small determinant with pivoting."""
        assert determinant([[mpf(1), mpf(2)], [mpf(3), mpf(4)]]) == -2

    def test_empty_determinant_returns_one(self):
        """Test the 0x0 convention."""
        assert determinant([]) == 1

    def test_singular_matrix_returns_zero(self):
        """Test that a zero column gives 0."""
        assert determinant([[mpf(0), mpf(1)], [mpf(0), mpf(2)]]) == 0

    def test_symmetric_limit_returns_sinc_at_zero(self):
        """Test the limit of sin(x)/x at 0."""
        value = symmetric_limit(lambda x: mp.sin(x) / x, (mpf(0),), (1,))
        assert abs(value - 1) < mpf("1e-30")

    def test_near_singular_detects_removable_lines(self):
        """Test the u = 0 and v = -pi/2 lines."""
        assert near_singular(mpf(0))
        assert near_singular(-mp.pi / 2)
        assert not near_singular(mpf("0.3"))


class TestWorkingPrecision:
    """Tests for the precision context manager."""

    def test_working_precision_never_lowers(self):
        """Test that a lower request keeps the current precision."""
        with working_precision(100) as bits:
            assert bits == 512
            assert mp.prec == 512

    def test_working_precision_raises_and_restores(self):
        """Test that a higher request is applied then undone."""
        with working_precision(1024):
            assert mp.prec == 1024
        assert mp.prec == 512


class TestCotTowerSymbolic:
    """Tests for the cot tower against symbolic differentiation."""

    @pytest.mark.parametrize("order", [3, 5, 7])
    def test_tower_matches_sympy_derivative(self, order):
        """Test P_k(cot x) = d^k cot(x) / dx^k symbolically."""
        import sympy

        x = sympy.Symbol("x")
        coeffs = cot_derivative_polynomials(order).polys[order]
        tower = sum(c * sympy.cot(x) ** i for i, c in enumerate(coeffs))
        assert sympy.expand(sympy.diff(sympy.cot(x), x, order) - tower) == 0
