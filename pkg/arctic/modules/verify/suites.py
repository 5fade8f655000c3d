"""
Verification suites behind ``verify``.

Every check compares a computed value with an independent reference and
records where the reference comes from:

- enumeration: brute-force or LGV counting,
- closed form: product formulas and closed-form determinants,
- identity: an exact relation that must vanish,
- limit: finite-size data against an asymptotic prediction.
"""

import logging

from mpmath import mp, mpf

from arctic.core.config import working_precision
from arctic.core.errors import ArgumentError
from arctic.modules.asymptotics.free_energy import (
    free_energy,
    liouville_residuals,
    one_point_exponent,
)
from arctic.modules.asymptotics.saddle import (
    branch_range,
    kappa,
    kappa_consistency,
    saddle_data,
    saddle_residuals,
    solve_xi_for_kappa,
)
from arctic.modules.curves.branches import (
    branch_curve,
    chebyshev_nodes,
    continuation_deviation,
    removable_envelope,
)
from arctic.modules.curves.tangent import (
    DT_SHIFT,
    TWENTYV_SHIFT,
    algebraic_residual_20v,
    derivative_mismatch,
    endpoint_height,
    envelope_point,
    secant_deviation,
    tangency_residual,
)
from arctic.modules.enumerate.aztec import count_aztec_triangle, refined_dt_identity
from arctic.modules.enumerate.vertex_models import enumerate_vertex_model
from arctic.modules.partition.determinants import (
    CLASSICAL,
    delta,
    delta_closed_form,
    free_fermion_delta_check,
    sixvp_delta,
)
from arctic.modules.partition.partition_fn import (
    closed_counts,
    free_fermion_factor,
    one_point,
    one_point_from_refined,
    partition_fn,
    recursion_residual,
    refined_partition,
    refined_partition_from_counts,
    twentyv_count,
)
from arctic.modules.partition.weights import make_params, named_point, unit_weights, validate_domain
from arctic.modules.paths.path_partition import (
    path_partition_closed,
    path_table_dp,
    resolvent_residual,
)
from arctic.schemas.models import BranchId, CheckResult, ExponentKind, ModelKind

logger = logging.getLogger(__name__)

PATH_GRID = 30

ENUMERATION = "enumeration"
CLOSED_FORM = "closed form"
IDENTITY = "identity"
LIMIT = "limit"


def _result(suite: str, name: str, value, reference, provenance: str, tol, relative=False) -> CheckResult:
    gap = abs(value - reference)
    if relative and reference != 0:
        gap = gap / abs(reference)
    passed = bool(gap <= tol)
    logger.info(f"[{suite}] {name}: {'ok' if passed else 'FAILED'} ({mp.nstr(gap, 5)})")
    return CheckResult(
        suite=suite,
        name=name,
        value=value,
        reference=reference,
        provenance=provenance,
        passed=passed,
    )


def _below(suite: str, name: str, value, tol, provenance=IDENTITY) -> CheckResult:
    return _result(suite, name, abs(value), mpf(0), provenance, tol)


# -- counts -------------------------------------------------------------------------------

def check_counts() -> list:
    suite = "counts"
    results = []
    cases = (
        ("asm", ModelKind.SIXV, range(1, 5)),
        ("vsasm", ModelKind.SIXVP, range(1, 4)),
        ("uniform", ModelKind.TWENTYV, range(1, 4)),
    )
    for point, model, sizes in cases:
        params = named_point(point).params
        for n in sizes:
            exact = closed_counts(model, n)
            results.append(
                _result(suite, f"{point} Z_{n} vs product formula", partition_fn(params, n), exact, CLOSED_FORM, mpf("1e-20"), True)
            )
            counted = enumerate_vertex_model(unit_weights(model), n).total
            results.append(_result(suite, f"{point} enumeration n={n}", mpf(counted), mpf(exact), ENUMERATION, 0))
    for n in range(1, 5):
        tilings = count_aztec_triangle(n).total
        results.append(_result(suite, f"Aztec triangle n={n}", mpf(tilings), mpf(twentyv_count(n)), ENUMERATION, 0))
    for n in range(1, 4):
        results.append(_below(suite, f"refined domino identity n={n}", mpf(refined_dt_identity(n)), 0, ENUMERATION))
    return results


# -- recursions -----------------------------------------------------------------------------

def check_recursions() -> list:
    suite = "recursions"
    results = []
    points = [
        ("asm", named_point("asm").params, range(1, 7)),
        ("6v generic", make_params("6v", mp.pi / 5, mpf("1.9"), 0), range(1, 7)),
        ("6vp generic", make_params("6vp", mp.pi / 5, mpf("0.2"), mpf("-1.6")), range(1, 7)),
        ("vsasm", named_point("vsasm").params, range(1, 5)),
        ("free fermion", named_point("free_fermion").params, range(1, 4)),
    ]
    for label, params, sizes in points:
        for n in sizes:
            r_delta, r_one = recursion_residual(params, n)
            results.append(_below(suite, f"{label} Delta recursion n={n}", r_delta, mpf("1e-20")))
            results.append(_below(suite, f"{label} one-point recursion n={n}", r_one, mpf("1e-20")))
    return results


# -- closed forms -----------------------------------------------------------------------------

_CLOSED_FORM_POINTS = (
    (mpf("0.3"), mpf("-1.1")),
    (mpf("0.2"), mpf("-0.9")),
    (mp.pi / 16, -5 * mp.pi / 8),
    (mpf("0.1"), mpf("-1.3")),
    (mpf("-0.2"), mpf("-1.2")),
)


def check_closed_forms() -> list:
    suite = "closed_forms"
    results = []
    for u, v in _CLOSED_FORM_POINTS:
        label = f"{mp.nstr(u, 6)}, {mp.nstr(v, 6)}"
        for n in range(1, 9):
            with working_precision(1024):
                value = sixvp_delta(u, v, mpf(0), n)
                reference = delta_closed_form(CLASSICAL, u, v, n)
                gap = free_fermion_delta_check(u, v, n)
            results.append(_result(suite, f"classical Delta_{n}({label})", +value, +reference, CLOSED_FORM, mpf("1e-30"), True))
            results.append(_below(suite, f"free-fermion Delta_{n}({label})", +gap, mpf("1e-30"), CLOSED_FORM))

    for w in (mpf("1.9"), mpf("1.2")):
        eta = mp.pi / 5
        for n in (2, 4, 6):
            z = partition_fn(make_params("6v", eta, w, 0), n)
            mirrored = partition_fn(make_params("6v", eta, mp.pi - w, 0), n)
            results.append(_result(suite, f"6v reflection u-v={w} n={n}", mirrored, z, IDENTITY, mpf("1e-25"), True))
    sixvp = make_params("6vp", mp.pi / 5, mpf("0.2"), mpf("-1.6"), rho_o=mpf("1.3"), rho_e=mpf("1.3"))
    reflected = sixvp.model_copy(update={"u": -sixvp.u, "v": -mp.pi - sixvp.v})
    for n in (2, 4):
        results.append(
            _result(suite, f"6vp reflection n={n}", partition_fn(reflected, n), partition_fn(sixvp, n), IDENTITY, mpf("1e-25"), True)
        )
    free = named_point("free_fermion").params
    for n in (2, 3, 4):
        results.append(
            _result(suite, f"free-fermion factorization n={n}", partition_fn(free, n), free_fermion_factor(free, n), CLOSED_FORM, mpf("1e-25"), True)
        )
    for params in (named_point("asm").params, make_params("6v", mp.pi / 3, mpf("1.5"), 0), make_params("6vp", mp.pi / 5, mpf("0.2"), mpf("-1.6"))):
        smallest = min(delta(params, n) for n in range(1, 6))
        results.append(
            _result(suite, f"{params.model.value} Delta positivity", mpf(1) if smallest > 0 else mpf(0), mpf(1), IDENTITY, 0)
        )

    path_points = [
        make_params("6v", mp.pi / 5, mpf("1.9"), 0),
        make_params("6vp", mp.pi / 5, mpf("0.2"), mpf("-1.6")),
        named_point("uniform").params,
        make_params("20v", mp.pi / 8, mpf("0.3"), mpf("-1.5"), nu=1),
        named_point("free_fermion").params,
    ]
    for params in path_points:
        worst = mpf(0)
        table = path_table_dp(params, PATH_GRID, PATH_GRID)
        for k in range(PATH_GRID + 1):
            for l in range(PATH_GRID + 1):
                closed = path_partition_closed(params, k, l)
                dp = table[k][l]
                worst = max(worst, abs(closed - dp) / max(abs(dp), mpf(1)))
        results.append(_below(suite, f"{params.model.value} path closed form vs transfer", worst, mpf("1e-25"), CLOSED_FORM))
    uniform = named_point("uniform").params
    results.append(_below(suite, "20v resolvent", resolvent_residual(uniform, 6), mpf("1e-25")))
    value = path_partition_closed(uniform, 4, 5)
    results.append(_below(suite, "uniform 20v path count is integral", value - mp.nint(value), mpf("1e-25")))

    liouville_points = [
        make_params("6v", mp.pi / 6, 2 * mp.pi / 3, 0),
        make_params("6v", mp.pi / 5, mpf("1.9"), 0),
        make_params("6vp", mp.pi / 5, mp.pi / 7, -mp.pi / 2),
        make_params("6vp", mp.pi / 5, mpf("0.2"), mpf("-1.6")),
        named_point("vsasm").params,
    ]
    for params in liouville_points:
        wronskian, ode = liouville_residuals(params)
        label = f"{params.model.value}({mp.nstr(params.u, 6)}, {mp.nstr(params.v, 6)})"
        results.append(_below(suite, f"{label} Liouville", wronskian, mpf("1e-25")))
        results.append(_below(suite, f"{label} psi ODE", ode, mpf("1e-25")))
    return results


# -- sum rules ---------------------------------------------------------------------------------

def check_sum_rules() -> list:
    suite = "sum_rules"
    results = []
    cases = [
        (make_params("6v", mp.pi / 5, mpf("1.9"), 0), 4, mpf("-0.4")),
        (make_params("6vp", mp.pi / 5, mpf("0.2"), mpf("-1.6")), 3, mpf("-0.3")),
        (named_point("uniform").params, 2, mpf("-0.2")),
        (make_params("20v", mp.pi / 8, mpf("0.3"), mpf("-1.5")), 2, mpf("-0.3")),
    ]
    for params, n, xi in cases:
        counts = enumerate_vertex_model(params, n)
        rebuilt = refined_partition_from_counts(params, counts, xi)
        direct = refined_partition(params, n, xi)
        results.append(
            _result(suite, f"{params.model.value} Z_{n}[xi] from refined counts", rebuilt, direct, IDENTITY, mpf("1e-20"), True)
        )
        if params.model != ModelKind.SIXVP:
            series = one_point_from_refined(params, counts, xi)
            results.append(
                _result(suite, f"{params.model.value} H_{n}[xi] generating identity", series, one_point(params, n, xi), IDENTITY, mpf("1e-20"), True)
            )
    return results


# -- saddles --------------------------------------------------------------------------------------

def _steps(step: str, count: int = 10) -> list:
    return [-k * mpf(step) for k in range(1, count + 1)]


def _saddle_points():
    return [
        (named_point("asm").params, _steps("0.09")),
        (make_params("6vp", mp.pi / 3, mp.pi / 12, -mp.pi / 2), _steps("0.024")),
        (named_point("vsasm").params, _steps("0.09")),
        (named_point("uniform").params, _steps("0.07")),
        (named_point("dt").params, _steps("0.07")),
    ]


def check_saddles() -> list:
    suite = "saddles"
    results = []
    for params, xis in _saddle_points():
        for xi in xis:
            label = f"{params.model.value} xi={mp.nstr(xi, 4)}"
            worst = max(saddle_residuals(params, xi))
            results.append(_below(suite, f"{label} saddle equations", worst, mpf("1e-25")))
            results.append(_below(suite, f"{label} kappa from phi", kappa_consistency(params, xi), mpf("1e-25")))
    dt = named_point("dt").params
    data = saddle_data(dt, -mp.pi / 8)
    results.append(_result(suite, "domino kappa/lambda at -pi/8", data.kappa / data.lam, mpf(1), CLOSED_FORM, mpf("1e-25")))
    asm = named_point("asm").params
    target = kappa(asm, mpf("-0.4"))
    xi_star = solve_xi_for_kappa(asm, target)
    results.append(_result(suite, "asm xi from kappa round trip", kappa(asm, xi_star), target, IDENTITY, mpf("1e-20")))
    return results


def check_saddles_at(params, num_points: int = 5) -> list:
    """Saddle equations on Chebyshev nodes of the branch range of explicit parameters."""
    validate_domain(params)
    suite = "saddles"
    lo, hi = branch_range(params)
    results = []
    for xi in chebyshev_nodes(lo, hi, num_points + 2)[1:-1]:
        worst = max(saddle_residuals(params, xi))
        results.append(_below(suite, f"{params.model.value} xi={mp.nstr(xi, 6)} saddle equations", worst, mpf("1e-25")))
    return results


# -- curves -------------------------------------------------------------------------------------------

def check_curves(num_points: int = 24) -> list:
    suite = "curves"
    results = []
    samples = [
        named_point("asm").params,
        named_point("vsasm").params,
        make_params("6vp", mp.pi / 3, mp.pi / 12, -mp.pi / 2),
        named_point("uniform").params,
    ]
    for params in samples:
        for branch in (BranchId.NE, BranchId.SE):
            curve = branch_curve(params, branch, num_points)
            worst = max(tangency_residual(p) for p in curve.points)
            results.append(_below(suite, f"{params.model.value} {branch.value} tangency", worst, mpf("1e-20")))
        lo, _ = branch_range(params)
        xi = lo / 2
        results.append(_below(suite, f"{params.model.value} secant", secant_deviation(params, xi), mpf("1e-4")))
        results.append(_below(suite, f"{params.model.value} dual vs finite differences", derivative_mismatch(params, xi), mpf("1e-8")))

    free = make_params("6vp", mp.pi / 4, 0, -mp.pi / 2)
    circle = branch_curve(free, BranchId.NE, num_points)
    worst = max(abs((p.x + 1) ** 2 + (p.y - 1) ** 2 - 1) for p in circle.points)
    results.append(_below(suite, "free-fermion half circle", worst, mpf("1e-20"), CLOSED_FORM))
    results.append(_below(suite, "free-fermion SE continuation", continuation_deviation(free, 16), mpf("1e-8")))

    uniform = branch_curve(named_point("uniform").params, BranchId.NE, num_points)
    worst = max(abs(algebraic_residual_20v(p, TWENTYV_SHIFT)) for p in uniform.points)
    results.append(_below(suite, "20v NE algebraic equation", worst, mpf("1e-8"), CLOSED_FORM))
    domino = branch_curve(named_point("dt").params, BranchId.FULL_ANALYTIC, num_points)
    worst = max(abs(algebraic_residual_20v(p, DT_SHIFT)) for p in domino.points)
    results.append(_below(suite, "domino algebraic equation", worst, mpf("1e-8"), CLOSED_FORM))

    for eta in (mp.pi / 6, mp.pi / 4, mp.pi / 3):
        sixvp = branch_curve(make_params("6vp", eta, 0, -mp.pi / 2), BranchId.NE, num_points)
        sixv = branch_curve(make_params("6v", eta, mp.pi / 2, 0), BranchId.NE, num_points)
        worst = max(
            max(abs(p.x - 2 * q.x), abs(p.y - 2 * q.y)) for p, q in zip(sixvp.points, sixv.points)
        )
        results.append(_below(suite, f"6vp = 2 x 6v at eta={mp.nstr(eta, 6)}", worst, mpf("1e-10"), CLOSED_FORM))

    near_limit = make_params("6vp", mp.pi / 4, mp.pi / 4 - mpf("1e-6"), -mp.pi / 2)
    ellipse = branch_curve(near_limit, BranchId.NE, num_points)
    worst = max(abs((2 * p.x + 1) ** 2 + (p.y - 1) ** 2 - 1) for p in ellipse.points)
    results.append(_below(suite, "free-fermion ellipse limit", worst, mpf("1e-4"), LIMIT))

    vsasm = named_point("vsasm").params
    ne = branch_curve(vsasm, BranchId.NE, num_points)
    se = branch_curve(vsasm, BranchId.SE, num_points)
    worst = max(max(abs(p.x - q.x), abs(p.y - (2 - q.y))) for p, q in zip(se.points, ne.points))
    results.append(_below(suite, "vsasm SE mirrors NE in y = 1", worst, mpf("1e-20")))

    for params in samples:
        curve = branch_curve(params, BranchId.NE, num_points)
        height = endpoint_height(params)
        first, last = curve.points[0], curve.points[-1]
        results.append(_result(suite, f"{params.model.value} NE reaches the N border", first.y, mpf(height), CLOSED_FORM, mpf("1e-5")))
        results.append(_below(suite, f"{params.model.value} NE reaches the E border", last.x, mpf("1e-5"), CLOSED_FORM))

    dt = named_point("dt").params
    end = envelope_point(dt, -3 * mp.pi / 8)
    corner = 2 * mp.sqrt(2) / 3
    results.append(_result(suite, "domino NW end x", end.x, corner - 2, CLOSED_FORM, mpf("1e-10")))
    results.append(_result(suite, "domino NW end y", end.y, corner, CLOSED_FORM, mpf("1e-10")))
    top = removable_envelope(dt, -mp.pi / 4)
    results.append(_result(suite, "domino horizontal tangent x", top.x, 2 * (mp.sqrt(3) - 3) / 3, CLOSED_FORM, mpf("1e-10")))
    results.append(_result(suite, "domino horizontal tangent y", top.y, mpf(1), CLOSED_FORM, mpf("1e-10")))
    return results


# -- asymptotic convergence ---------------------------------------------------------------------------

def check_asymptotic_convergence() -> list:
    suite = "asymptotic_convergence"
    results = []
    uniform = named_point("uniform").params
    f = free_energy(uniform)
    gaps = []
    for n in (8, 16, 32):
        finite = -mp.log(mpf(twentyv_count(n))) / n ** 2
        gaps.append(abs(finite - f))
    results.append(_result(suite, "20v free energy at N=32", gaps[-1], mpf(0), LIMIT, mpf("0.05")))
    decreasing = mpf(1) if gaps[0] > gaps[1] > gaps[2] else mpf(0)
    results.append(_result(suite, "20v free-energy gaps decrease", decreasing, mpf(1), LIMIT, 0))

    asm = named_point("asm").params
    for xi in (mpf("-0.2"), mpf("-0.5"), mpf("-0.8")):
        with working_precision(4096):
            finite = -mp.log(abs(one_point(asm, 32, xi))) / 32
            psi = one_point_exponent(asm, xi, ExponentKind.PSI)
        results.append(_result(suite, f"asm psi at xi={mp.nstr(xi, 3)}, N=32", +finite, +psi, LIMIT, mpf("0.05")))
    return results


SUITES = {
    "counts": check_counts,
    "recursions": check_recursions,
    "closed_forms": check_closed_forms,
    "sum_rules": check_sum_rules,
    "saddles": check_saddles,
    "curves": check_curves,
    "asymptotic_convergence": check_asymptotic_convergence,
}


def run_suite(name: str) -> list:
    """Results of one suite, or of every suite in order for "all"."""
    if name == "all":
        return [r for suite in SUITES.values() for r in suite()]
    if name not in SUITES:
        raise ArgumentError(f"unknown suite {name}; choose from {', '.join(SUITES)} or all")
    return SUITES[name]()
