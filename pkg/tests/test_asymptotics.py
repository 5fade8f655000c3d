"""
Unit tests for free energies, exponents and saddle data.

Tests cover:
- Free energies at the ASM, free-fermion and uniform 20V points, and on the u = 0 line
- Convergence of finite-size data at N = 32
- One-point exponents and the t variable
- Liouville residuals
- Saddle equations, kappa consistency and the inverse map
- Branch ranges
"""

import pytest
from mpmath import mp, mpf

from arctic.core.config import working_precision
from arctic.core.errors import ArgumentError
from arctic.modules.asymptotics.free_energy import (
    alpha,
    exponent_set,
    free_energy,
    liouville_residuals,
    one_point_exponent,
    reduced_exponent,
    t_param,
)
from arctic.modules.asymptotics.saddle import (
    branch_range,
    check_in_range,
    kappa,
    kappa_consistency,
    saddle_data,
    saddle_residuals,
    solve_xi_for_kappa,
)
from arctic.modules.partition.partition_fn import one_point, twentyv_count
from arctic.modules.partition.weights import make_params, named_point
from arctic.schemas.models import ExponentKind


class TestFreeEnergy:
    """Tests for bulk free energies."""

    def test_alpha_at_ice_point_returns_three_halves(self):
        """Test alpha(pi/6) = 3/2."""
        assert abs(alpha(mp.pi / 6) - mpf(3) / 2) < mpf("1e-100")

    def test_alpha_outside_range_raises_argument_error(self):
        """Test that eta = 0 is outside the disordered regime."""
        with pytest.raises(ArgumentError):
            alpha(0)

    def test_asm_free_energy_returns_log_of_growth(self):
        """Test f = -log(3 sqrt(3) / 4) for ASMs."""
        expected = -mp.log(3 * mp.sqrt(3) / 4)
        assert abs(free_energy(named_point("asm").params) - expected) < mpf("1e-60")

    def test_free_fermion_free_energy_returns_minus_log_rho(self):
        """Test that at eta = pi/4 the 6V free energy is -log rho."""
        params = make_params("6v", mp.pi / 4, mpf("1.2"), 0, rho=3)
        assert abs(free_energy(params) + mp.log(3)) < mpf("1e-60")

    def test_domino_shares_20v_free_energy(self):
        """Test that DT and 20V share f."""
        dt = free_energy(named_point("dt").params)
        assert abs(dt - free_energy(named_point("uniform").params)) < mpf("1e-60")

    def test_uniform_20v_free_energy_returns_closed_value(self):
        """Test f = log(3^(9/4) / 2^(9/2)) at the uniform 20V point."""
        expected = mpf(9) / 4 * mp.log(3) - mpf(9) / 2 * mp.log(2)
        value = free_energy(named_point("uniform").params)
        assert abs(value - expected) < mpf("1e-25")
        assert abs(value - mpf("-0.6472846630")) < mpf("1e-9")

    @pytest.mark.parametrize("n", [8, 16, 32])
    def test_uniform_20v_counts_approach_free_energy(self, n):
        """Test that -log Z_N / N^2 from the exact counts is within 0.6 / N of f."""
        finite = -mp.log(mpf(twentyv_count(n))) / n ** 2
        assert abs(finite - free_energy(named_point("uniform").params)) < mpf("0.6") / n

    def test_sixvp_free_energy_at_u_zero_returns_two_sided_limit(self):
        """Test the removable line u = 0 against u = +-1e-8."""
        at_zero = free_energy(make_params("6vp", mp.pi / 6, 0, -mp.pi / 2))
        h = mpf("1e-8")
        plus = free_energy(make_params("6vp", mp.pi / 6, h, -mp.pi / 2))
        minus = free_energy(make_params("6vp", mp.pi / 6, -h, -mp.pi / 2))
        assert abs(at_zero - (plus + minus) / 2) < mpf("1e-12")

    def test_exponent_set_carries_free_energy(self):
        """Test that the exponent set reports f, psi and phi."""
        params = named_point("asm").params
        ex = exponent_set(params, mpf("-0.3"))
        assert abs(ex.f - free_energy(params)) < mpf("1e-60")
        assert abs(ex.phi - one_point_exponent(params, mpf("-0.3"), ExponentKind.PHI)) < mpf("1e-60")


class TestExponents:
    """Tests for one-point exponents."""

    def test_domino_exponent_returns_20v_exponent(self):
        """Test that DT reuses the 20V one-point exponent."""
        xi = mpf("-0.3")
        dt = one_point_exponent(named_point("dt").params, xi)
        twenty = one_point_exponent(named_point("uniform").params, xi)
        assert abs(dt - twenty) < mpf("1e-40")

    def test_sixvp_psi_returns_zero_as_xi_vanishes(self):
        """Test psi -> 0 as xi -> 0 for 6V'."""
        params = make_params("6vp", mp.pi / 5, mpf("0.2"), mpf("-1.6"))
        assert abs(one_point_exponent(params, mpf("-1e-15"), ExponentKind.PSI)) < mpf("1e-12")

    @pytest.mark.parametrize("xi", ["-0.2", "-0.5", "-0.8"])
    def test_asm_psi_matches_finite_size_at_n_32(self, xi):
        """Test -log H_32 / 32 against psi at the ASM point."""
        asm = named_point("asm").params
        xi = mpf(xi)
        with working_precision(4096):
            finite = -mp.log(abs(one_point(asm, 32, xi))) / 32
            psi = one_point_exponent(asm, xi, ExponentKind.PSI)
        assert abs(finite - psi) < mpf("0.05")

    def test_t_at_zero_returns_weight_ratio(self):
        """Test t[0] = b / a for 6V."""
        params = make_params("6v", mp.pi / 5, mpf("1.9"), 0)
        w, eta = params.u - params.v, params.eta
        assert abs(t_param(params, 0) - mp.sin(w - eta) / mp.sin(w + eta)) < mpf("1e-100")

    def test_reduced_exponent_of_20v_raises_argument_error(self):
        """Test that reduced exponents are 6v and 6vp only."""
        with pytest.raises(ArgumentError):
            reduced_exponent(named_point("uniform").params, mpf("-0.2"))

    @pytest.mark.parametrize(
        "params",
        [
            make_params("6v", mp.pi / 6, 2 * mp.pi / 3, 0),
            make_params("6v", mp.pi / 5, mpf("1.9"), 0),
            make_params("6vp", mp.pi / 5, mpf("0.2"), mpf("-1.6")),
        ],
        ids=["6v-a", "6v-b", "6vp"],
    )
    def test_liouville_residuals_vanish(self, params):
        """Test W W_uv - W_u W_v = sign and the psi ODE."""
        wronskian, ode = liouville_residuals(params)
        assert wronskian < mpf("1e-25")
        assert ode < mpf("1e-25")

    def test_liouville_of_20v_raises_argument_error(self):
        """Test that Liouville residuals are 6v and 6vp only."""
        with pytest.raises(ArgumentError):
            liouville_residuals(named_point("uniform").params)


class TestSaddle:
    """Tests for saddle-point data."""

    @pytest.mark.parametrize("xi", ["-0.1", "-0.5", "-0.9"])
    def test_asm_saddle_equations_vanish(self, xi):
        """Test the 6V saddle equations along the ASM branch."""
        assert max(saddle_residuals(named_point("asm").params, mpf(xi))) < mpf("1e-25")

    @pytest.mark.parametrize("xi", ["-0.1", "-0.4"])
    def test_uniform_saddle_equations_vanish(self, xi):
        """Test the 20V saddle equations at the uniform point."""
        assert max(saddle_residuals(named_point("uniform").params, mpf(xi))) < mpf("1e-25")

    def test_sixvp_kappa_matches_exponent(self):
        """Test kappa against -(t/t') phi' for 6V'."""
        params = make_params("6vp", mp.pi / 3, mp.pi / 12, -mp.pi / 2)
        assert kappa_consistency(params, mpf("-0.2")) < mpf("1e-25")

    def test_domino_kappa_returns_shifted_20v_kappa(self):
        """Test kappa_DT = 2 kappa_20V - 1."""
        xi = mpf("-0.3")
        dt = kappa(named_point("dt").params, xi)
        assert abs(dt - (2 * kappa(named_point("uniform").params, xi) - 1)) < mpf("1e-60")

    def test_domino_kappa_over_lambda_returns_one_at_midpoint(self):
        """Test kappa = lambda at xi = -pi/8."""
        data = saddle_data(named_point("dt").params, -mp.pi / 8)
        assert abs(data.kappa / data.lam - 1) < mpf("1e-25")

    def test_solve_xi_for_kappa_inverts_kappa(self):
        """Test the bisection round trip on the ASM branch."""
        params = named_point("asm").params
        target = kappa(params, mpf("-0.4"))
        assert abs(solve_xi_for_kappa(params, target) + mpf("0.4")) < mpf("1e-15")

    def test_xi_outside_range_raises_argument_error(self):
        """Test that saddle data need xi in the branch range."""
        with pytest.raises(ArgumentError):
            saddle_data(named_point("asm").params, mpf("0.5"))


class TestBranchRange:
    """Tests for xi ranges."""

    def test_asm_range_returns_minus_pi_over_three(self):
        """Test [w + eta - pi, 0] at the ASM point."""
        lo, hi = branch_range(named_point("asm").params)
        assert abs(lo + mp.pi / 3) < mpf("1e-100")
        assert hi == 0

    def test_domino_ranges_return_ne_and_full(self):
        """Test [-pi/4, 0] and [-3pi/8, 0]."""
        params = named_point("dt").params
        assert abs(branch_range(params)[0] + mp.pi / 4) < mpf("1e-100")
        assert abs(branch_range(params, full=True)[0] + 3 * mp.pi / 8) < mpf("1e-100")

    def test_domino_check_defaults_to_full_range(self):
        """Test that -pi/3 is accepted for DT."""
        check_in_range(named_point("dt").params, -mp.pi / 3)

    def test_uniform_range_returns_minus_pi_over_four(self):
        """Test [eta + u - v - pi, 0] at the uniform point."""
        lo, _ = branch_range(named_point("uniform").params)
        assert abs(lo + mp.pi / 4) < mpf("1e-100")
