"""
Command-line front end.

    python -m arctic verify counts
    python -m arctic curve --point uniform --model 20v --branches NE,SE --format svg --out curve.svg
    python -m arctic tabulate partition --model 20v --point uniform --n 1..6

Exit status: 0 when every check passes, 1 on failed checks or library
errors, 2 on invalid arguments.
"""

import argparse
import logging
import re
import sys

from mpmath import mp, mpf

from arctic.core.config import LOG_LEVEL, OUTPUT_DIGITS, PRECISION_BITS
from arctic.core.errors import ArcticError, ArgumentError
from arctic.modules.asymptotics.free_energy import exponent_set, free_energy, t_param
from arctic.modules.asymptotics.saddle import kappa
from arctic.modules.curves.branches import branch_curve, complete_curve, cruciform_branches
from arctic.modules.enumerate.aztec import count_aztec_triangle
from arctic.modules.enumerate.vertex_models import enumerate_vertex_model
from arctic.modules.partition.partition_fn import one_point, partition_fn
from arctic.modules.partition.weights import make_params, named_point, validate_domain
from arctic.modules.paths.path_partition import path_partition_closed
from arctic.modules.report.writers import emit, format_decimal, render_curves, render_table
from arctic.modules.verify.suites import SUITES, check_saddles_at, run_suite
from arctic.schemas.models import BranchId, ModelKind, OutputFormat, RunConfig

logger = logging.getLogger("arctic")

TABLE_KINDS = ("partition", "one_point", "refined", "path", "free_energy", "exponent")

_ANGLE = re.compile(r"^([+-]?)(\d*\.?\d*)\*?pi(?:/(\d+(?:\.\d*)?))?$")


def parse_angle(text: str):
    """mpf from a decimal or a multiple of pi such as -3pi/8 or 2*pi/3."""
    s = text.strip().replace(" ", "")
    match = _ANGLE.match(s)
    if match:
        sign, factor, divisor = match.groups()
        value = mp.pi * (mpf(factor) if factor else 1)
        if divisor:
            value /= mpf(divisor)
        return -value if sign == "-" else value
    try:
        return mpf(s)
    except (ValueError, TypeError):
        raise ArgumentError(f"cannot read {text!r} as a number or multiple of pi")


def parse_sizes(text: str) -> list:
    """'1..6', '4' or '1,3,5'."""
    sizes = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            sizes.extend(range(int(lo), int(hi) + 1))
        elif part:
            sizes.append(int(part))
    if not sizes or min(sizes) < 0:
        raise ArgumentError(f"bad size range {text!r}")
    return sizes


def _has_explicit(args) -> bool:
    return any(getattr(args, name) is not None for name in ("eta", "u", "v"))


def resolve_params(args):
    """ModelParams from --point or from explicit --eta/--u/--v, validated."""
    if args.point:
        eta = parse_angle(args.eta) if args.eta is not None else None
        params = named_point(args.point, eta).params
        if args.model and ModelKind(args.model) != params.model:
            raise ArgumentError(f"point {args.point} belongs to model {params.model.value}, not {args.model}")
        return params
    if not _has_explicit(args):
        return None
    if not args.model:
        raise ArgumentError("explicit parameters need --model")
    if args.eta is None or args.u is None or args.v is None:
        raise ArgumentError("explicit parameters need --eta, --u and --v")
    params = make_params(
        args.model,
        parse_angle(args.eta),
        parse_angle(args.u),
        parse_angle(args.v),
        rho=parse_angle(args.rho),
        rho_o=parse_angle(args.rho_o),
        rho_e=parse_angle(args.rho_e),
        nu=parse_angle(args.nu),
    )
    return validate_domain(params)


def build_config(args) -> RunConfig:
    params = resolve_params(args)
    branches = [BranchId(b.strip().upper()) for b in args.branches.split(",")]
    return RunConfig(
        command=args.command,
        model=params.model if params else (ModelKind(args.model) if args.model else None),
        params=params,
        point=args.point,
        n=parse_sizes(args.n) if args.n else [],
        xi=[parse_angle(x) for x in args.xi.split(",")] if args.xi else [],
        points=args.points,
        precision_bits=args.precision_bits,
        digits=args.digits,
        branches=branches,
        output_format=OutputFormat(args.format),
        out=args.out,
    )


# -- commands ----------------------------------------------------------------------------

def cmd_verify(args, config: RunConfig) -> int:
    results = run_suite(args.suite)
    if config.params is not None and args.suite in ("saddles", "all"):
        results += check_saddles_at(config.params)
    rows = [
        {
            "suite": r.suite,
            "name": r.name,
            "value": format_decimal(r.value, 12),
            "reference": format_decimal(r.reference, 12),
            "provenance": r.provenance,
            "passed": "pass" if r.passed else "FAIL",
        }
        for r in results
    ]
    columns = ["suite", "name", "value", "reference", "provenance", "passed"]
    emit(render_table(rows, columns, config.output_format), config.out)
    failed = [r for r in results if not r.passed]
    for r in failed:
        logger.error(f"check failed: [{r.suite}] {r.name}")
    return 1 if failed else 0


def cmd_curve(args, config: RunConfig) -> int:
    params = config.params
    if params is None:
        raise ArgumentError("curve needs --point or explicit parameters")
    if args.complete:
        branches = complete_curve(params, config.points)
    elif args.cruciform:
        branches = cruciform_branches(params, config.points)
    else:
        branches = [branch_curve(params, b, config.points) for b in config.branches]
    emit(render_curves(branches, config.output_format, config.digits), config.out)
    return 0


def _table_rows(kind: str, config: RunConfig) -> tuple:
    params = config.params
    digits = config.digits
    fmt = lambda x: format_decimal(x, digits)
    if params is None:
        raise ArgumentError(f"tabulate {kind} needs --point or explicit parameters")
    model = params.model.value
    if kind == "partition":
        rows = [{"model": model, "n": n, "Z": fmt(partition_fn(params, n))} for n in config.n]
        return rows, ["model", "n", "Z"]
    if kind == "one_point":
        rows = [
            {"model": model, "n": n, "xi": fmt(xi), "H": fmt(one_point(params, n, xi))}
            for n in config.n
            for xi in config.xi
        ]
        return rows, ["model", "n", "xi", "H"]
    if kind == "refined":
        rows = []
        for n in config.n:
            counts = count_aztec_triangle(n) if params.model == ModelKind.DT else enumerate_vertex_model(params, n)
            for k, z in enumerate(counts.by_exit, start=counts.first_k):
                rows.append({"model": model, "n": n, "k": k, "Z": fmt(z)})
        return rows, ["model", "n", "k", "Z"]
    if kind == "path":
        rows = [
            {"model": model, "k": k, "l": l, "Y": fmt(path_partition_closed(params, k, l))}
            for k in config.n
            for l in config.n
        ]
        return rows, ["model", "k", "l", "Y"]
    if kind == "free_energy":
        return [{"model": model, "f": fmt(free_energy(params))}], ["model", "f"]
    rows = []
    for xi in config.xi:
        ex = exponent_set(params, xi)
        rows.append(
            {
                "model": model,
                "xi": fmt(xi),
                "f": fmt(ex.f),
                "psi": fmt(ex.psi),
                "phi": fmt(ex.phi),
                "t": fmt(t_param(params, xi)),
                "kappa": fmt(kappa(params, xi)),
            }
        )
    return rows, ["model", "xi", "f", "psi", "phi", "t", "kappa"]


def cmd_tabulate(args, config: RunConfig) -> int:
    rows, columns = _table_rows(args.kind, config)
    emit(render_table(rows, columns, config.output_format), config.out)
    return 0


# -- parser --------------------------------------------------------------------------------

def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument("--model", choices=[m.value for m in ModelKind])
    parser.add_argument("--point", help="named point: asm, vsasm, uniform, dt, free_fermion, tau_asm, ...")
    parser.add_argument("--eta")
    parser.add_argument("--u")
    parser.add_argument("--v")
    parser.add_argument("--rho", default="1")
    parser.add_argument("--rho-o", dest="rho_o", default="1")
    parser.add_argument("--rho-e", dest="rho_e", default="1")
    parser.add_argument("--nu", default="1")
    parser.add_argument("--n", help="sizes such as 1..6 or 2,4")
    parser.add_argument("--xi", help="comma-separated spectral shifts, e.g. -pi/8,-0.3")
    parser.add_argument("--points", type=int, default=200)
    parser.add_argument("--precision-bits", dest="precision_bits", type=int, default=PRECISION_BITS)
    parser.add_argument("--branches", default="NE")
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.CSV.value)
    parser.add_argument("--out")
    parser.add_argument("--digits", type=int, default=OUTPUT_DIGITS)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="arctic", description="Arctic curves and partition functions of ice and domino models")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("suite", choices=list(SUITES) + ["all"])
    _add_common(verify)

    curve = sub.add_parser("curve", help="sample arctic-curve branches")
    _add_common(curve)
    curve.add_argument("--complete", action="store_true", help="6v: add NW and SW by central symmetry")
    curve.add_argument("--cruciform", action="store_true", help="dt: eight reflected copies (conjectural composition)")

    tabulate = sub.add_parser("tabulate", help="tables of exact or asymptotic quantities")
    tabulate.add_argument("kind", choices=TABLE_KINDS)
    _add_common(tabulate)
    return parser


COMMANDS = {"verify": cmd_verify, "curve": cmd_curve, "tabulate": cmd_tabulate}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=LOG_LEVEL, format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    mp.prec = args.precision_bits
    try:
        config = build_config(args)
        logger.debug(f"run config: {config.command} model={config.model} points={config.points}")
        return COMMANDS[args.command](args, config)
    except ArgumentError as e:
        logger.error(f"invalid arguments: {e}")
        return 2
    except ArcticError as e:
        logger.error(f"{args.command} failed: {e}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
