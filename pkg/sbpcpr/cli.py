from __future__ import annotations

import argparse
import sys
from typing import Any, Sequence

from pydantic import ValidationError

from .bases import OperatorConstructionError
from .extensions import LOG_LEVELS, configure_logging
from .config import ExperimentConfig
from .models import (
    BasisKind,
    ConfigurationError,
    CorrectionMode,
    Equation,
    FluxKind,
    GridKind,
    JacobianStrategy,
    Mapping,
)
from .views.advection import cmd_advection
from .views.burgers import cmd_burgers
from .views.ops_check import cmd_ops_check
from .views.presets import FIG2_CASES, fig1_preset, fig2_preset

EXIT_OK = 0
EXIT_INVALID_CONFIG = 2
EXIT_INVARIANT_FAILURE = 3
EXIT_BLOWUP = 4


def _choices(enum_cls) -> list[str]:
    return [member.value for member in enum_cls]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--log-level", choices=LOG_LEVELS, default="WARNING", help="Logging verbosity")

    run = argparse.ArgumentParser(add_help=False)
    run.add_argument("--basis", choices=_choices(BasisKind), help="Basis kind")
    run.add_argument("--p", type=int, help="Polynomial degree")
    run.add_argument("--elements", type=int, help="Number of elements")
    run.add_argument("--t-final", type=float, help="Final time")
    run.add_argument("--steps", type=int, help="Number of RK4 steps")
    run.add_argument("--sample-every", type=int, help="Record diagnostics every N steps")
    run.add_argument("--blowup-threshold", type=float, help="Amplitude above which a run counts as blown up")
    run.add_argument("--out", help="Output path prefix for the CSV files")
    run.add_argument(
        "--interp-basis",
        choices=[kind for kind in _choices(BasisKind) if kind != BasisKind.MODAL_LEGENDRE.value],
        help="Nodes used to interpolate the initial data for the modal basis",
    )

    parser = argparse.ArgumentParser(prog="sbpcpr", description="SBP CPR solvers for 1-D conservation laws")
    subparsers = parser.add_subparsers(dest="command", required=True)

    ops = subparsers.add_parser("ops-check", parents=[common], help="Build an operator set and check its invariants")
    ops.add_argument("--basis", required=True, choices=_choices(BasisKind), help="Basis kind")
    ops.add_argument("--p", required=True, type=int, help="Polynomial degree")
    ops.add_argument("--dump", help="Write the operator matrices to this path ('-' for stdout)")

    burgers = subparsers.add_parser("burgers", parents=[common, run], help="Inviscid Burgers' equation")
    burgers.add_argument("--flux", choices=[kind.value for kind in FluxKind if kind.is_burgers])
    burgers.add_argument("--corrections", choices=_choices(CorrectionMode))
    burgers.add_argument(
        "--plain-multiplication",
        action="store_true",
        help="Use the multiplication operator instead of its M-adjoint in the divergence correction",
    )
    burgers.add_argument("--paper-fig1", metavar="BASIS", choices=_choices(BasisKind), help="Reference Burgers preset")

    advection = subparsers.add_parser("advection", parents=[common, run], help="Linear advection on curvilinear grids")
    advection.add_argument("--grid", choices=_choices(GridKind))
    advection.add_argument("--mapping", choices=_choices(Mapping))
    advection.add_argument("--jacobian", choices=_choices(JacobianStrategy))
    advection.add_argument("--paper-fig2", metavar="CASE", choices=sorted(FIG2_CASES), help="Reference advection preset")

    return parser


def _run_fields(args: argparse.Namespace) -> dict[str, Any]:
    return {
        "basis": args.basis,
        "p": args.p,
        "elements": args.elements,
        "t_final": args.t_final,
        "steps": args.steps,
        "sample_every": args.sample_every,
        "blowup_threshold": args.blowup_threshold,
        "out": args.out,
        "interp_basis": args.interp_basis,
    }


def burgers_config(args: argparse.Namespace) -> ExperimentConfig:
    fields = _run_fields(args)
    fields.update(flux=args.flux, corrections=args.corrections)
    if args.plain_multiplication:
        fields["adjoint"] = False
    if args.paper_fig1:
        fields.pop("basis")
        return fig1_preset(args.paper_fig1, **fields)
    return ExperimentConfig(equation=Equation.BURGERS, **fields)


def advection_config(args: argparse.Namespace) -> ExperimentConfig:
    fields = _run_fields(args)
    fields.update(grid=args.grid, mapping=args.mapping, jacobian=args.jacobian)
    if args.paper_fig2:
        return fig2_preset(args.paper_fig2, **fields)
    return ExperimentConfig(equation=Equation.ADVECTION, flux=FluxKind.CENTRAL, **fields)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level)

    try:
        if args.command == "ops-check":
            report = cmd_ops_check(args.basis, args.p, dump=args.dump)
        elif args.command == "burgers":
            report = cmd_burgers(burgers_config(args))
        else:
            report = cmd_advection(advection_config(args))
    except (ConfigurationError, ValidationError) as exc:
        print(f"sbpcpr: invalid configuration: {exc}", file=sys.stderr)
        return EXIT_INVALID_CONFIG
    except OperatorConstructionError as exc:
        print(f"sbpcpr: {exc}", file=sys.stderr)
        return EXIT_INVARIANT_FAILURE
    return report.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
