"""
Norm, numerical radius and point evaluation of polynomial files
"""

import argparse
from typing import Dict, List

from polybohr.cli.deps import build_config, parse_grid, parse_point, resolve_truncation
from polybohr.core.exceptions import ArgumentError
from polybohr.models.polynomial import FreePolynomial, KPluriharmonic
from polybohr.repositories.polynomial_repo import load_polynomial
from polybohr.repositories.report_repo import render_table, write_text
from polybohr.services.fock_service import (
    assemble,
    assemble_pluriharmonic,
    berezin_kernel,
    berezin_transform,
    evaluate_scalar,
    truncation_for,
)
from polybohr.services.spectral_service import numerical_radius, operator_norm

SPECTRAL_COLUMNS = ["r", "truncation", "value", "residual", "method", "converged"]
EVAL_COLUMNS = ["i", "j", "value", "berezin", "tail_bound"]


def _operator(F, rho, trunc):
    if isinstance(F, KPluriharmonic):
        return assemble_pluriharmonic(F, rho, trunc)
    return assemble(F, rho, trunc)


def _spectral(args: argparse.Namespace, which: str) -> int:
    config = build_config(args)
    F = load_polynomial(args.file)
    radii = parse_grid(args.r)
    if args.profile:
        truncations = [truncation_for(F, h) for h in range(config.headroom + 1)]
    else:
        truncations = [resolve_truncation(config, F)]
    rows: List[Dict] = []
    for trunc in truncations:
        for r in radii:
            T = _operator(F, r, trunc)
            if which == "norm":
                result = operator_norm(T, tol=config.tol)
            else:
                result = numerical_radius(T, tol=config.tol, strict=False)
            rows.append({
                "r": r,
                "truncation": ";".join(str(d) for d in trunc.degrees),
                "value": result.value,
                "residual": result.residual,
                "method": result.method,
                "converged": result.converged,
            })
    write_text(render_table(rows, SPECTRAL_COLUMNS, config.format), config.out)
    return 0


def run_norm(args: argparse.Namespace) -> int:
    """Truncated norm ||F(rS)||, a lower bound of the full norm"""
    return _spectral(args, "norm")


def run_numrad(args: argparse.Namespace) -> int:
    """Truncated numerical radius w(F(rS))"""
    return _spectral(args, "numrad")


def run_eval(args: argparse.Namespace) -> int:
    """F(z) at a scalar point, optionally next to the truncated Berezin transform"""
    config = build_config(args)
    F = load_polynomial(args.file)
    if not isinstance(F, FreePolynomial):
        raise ArgumentError("eval needs a free polynomial file")
    z = parse_point(args.point)
    value = evaluate_scalar(F, z)
    berezin, tail = None, None
    if args.berezin:
        trunc = resolve_truncation(config, F)
        kernel = berezin_kernel(z, trunc)
        berezin = berezin_transform(assemble(F, 1.0, trunc), kernel)
        tail = kernel.tail_bound
    rows = []
    for i in range(F.coefficient_dim):
        for j in range(F.coefficient_dim):
            rows.append({
                "i": i,
                "j": j,
                "value": complex(value[i, j]),
                "berezin": complex(berezin[i, j]) if berezin is not None else None,
                "tail_bound": tail,
            })
    write_text(render_table(rows, EVAL_COLUMNS, config.format), config.out)
    return 0


def register(subparsers: argparse._SubParsersAction, parents: List[argparse.ArgumentParser]) -> None:
    for name, handler, text in (("norm", run_norm, "Truncated operator norm of a polynomial file"),
                                ("numrad", run_numrad, "Truncated numerical radius of a polynomial file")):
        parser = subparsers.add_parser(name, parents=parents, help=text,
                                       epilog="CSV columns: " + ", ".join(SPECTRAL_COLUMNS))
        parser.add_argument("file", help="Polynomial JSON file")
        parser.add_argument("--r", default="1", help="Radius or radii (comma list or start:stop:count)")
        parser.add_argument("--profile", action="store_true",
                            help="Report every headroom 0..--headroom (values nondecreasing)")
        parser.set_defaults(handler=handler)

    parser = subparsers.add_parser("eval", parents=parents, help="Evaluate a polynomial file at a scalar point",
                                   epilog="CSV columns: " + ", ".join(EVAL_COLUMNS))
    parser.add_argument("file", help="Polynomial JSON file")
    parser.add_argument("--point", required=True, help="Rows separated by ';', entries by ',': 0.1,0.2j;0.3")
    parser.add_argument("--berezin", action="store_true", help="Also report the truncated Berezin transform")
    parser.set_defaults(handler=run_eval)
