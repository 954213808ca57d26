"""
Bound and majorant curve command
"""

import argparse
from typing import Dict, List

from polybohr.cli.deps import build_config, parse_grid, resolve_truncation
from polybohr.core.exceptions import ArgumentError
from polybohr.models.polynomial import FreePolynomial
from polybohr.repositories.polynomial_repo import load_polynomial
from polybohr.repositories.report_repo import render_table, write_text
from polybohr.services.radius_service import bound_C, bound_K, bound_Omega, majorant_curve

CURVE_KINDS = ["D", "M", "C", "K", "Omega"]

CURVE_EPILOG = """Kinds:
  D      multi-homogeneous majorant of the polynomial in --file
  M      homogeneous majorant of the polynomial in --file
  C      C(r,...,r) for --k factors
  K      min{C, (1 - r^2)^(-k/2)}
  Omega  min{M(r), (1 - r^2)^(-k/2)}, equal to 1 on [0, 1/3]

CSV columns: r, value
"""


def run_curve(args: argparse.Namespace) -> int:
    """(r, value) pairs of one curve"""
    config = build_config(args)
    grid = parse_grid(args.r_grid)
    if args.kind in ("D", "M"):
        if not args.file:
            raise ArgumentError(f"curve {args.kind} needs --file")
        F = load_polynomial(args.file)
        if not isinstance(F, FreePolynomial):
            raise ArgumentError("majorant curves need a free polynomial file")
        trunc = resolve_truncation(config, F) if args.kind == "M" or config.trunc else None
        values = majorant_curve(args.kind, F, grid, trunc).values
    elif args.kind == "C":
        values = [bound_C([r] * args.k) for r in grid]
    elif args.kind == "K":
        values = [bound_K([r] * args.k) for r in grid]
    else:
        values = [bound_Omega(r, args.k) for r in grid]
    rows: List[Dict] = [{"r": r, "value": v} for r, v in zip(grid, values)]
    write_text(render_table(rows, ["r", "value"], config.format), config.out)
    return 0


def register(subparsers: argparse._SubParsersAction, parents: List[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser("curve", parents=parents, help="Bound or majorant curve as CSV",
                                   epilog=CURVE_EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("kind", choices=CURVE_KINDS)
    parser.add_argument("--r-grid", default="0:0.95:20", help="start:stop:count or comma separated radii")
    parser.add_argument("--k", type=int, default=1, help="Number of factors for C, K and Omega")
    parser.add_argument("--file", help="Polynomial JSON file for D and M")
    parser.set_defaults(handler=run_curve)
