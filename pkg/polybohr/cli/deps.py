"""
CLI dependencies - Argument parsing helpers and run configuration
"""

import argparse
import logging
from typing import Dict, List, Optional, Sequence, Union

import numpy as np
from pydantic import ValidationError

from polybohr.core.exceptions import ArgumentError
from polybohr.models.common import RunConfig
from polybohr.models.polynomial import FreePolynomial, KPluriharmonic, Truncation
from polybohr.services.fock_service import truncation_for

logger = logging.getLogger(__name__)


def common_parser() -> argparse.ArgumentParser:
    """Flags shared by every command"""
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--seed", type=int, help="Random seed (default from settings)")
    parser.add_argument("--trunc", help="Truncation degrees d1,d2,... (default: degree + headroom)")
    parser.add_argument("--headroom", type=int, help="Truncation headroom above the polynomial degree")
    parser.add_argument("--tol", type=float, help="Tolerance")
    parser.add_argument("--trials", type=int, help="Trials per suite")
    parser.add_argument("--out", help="Output file (default: stdout)")
    parser.add_argument("--format", choices=["csv", "json"], help="Output format")
    parser.add_argument("--workers", type=int, help="Worker threads")
    parser.add_argument("--log-level", help="Logging level (DEBUG, INFO, WARNING, ...)")
    return parser


def parse_int_list(text: str) -> List[int]:
    """'3' -> [3], '1,2,4' -> [1, 2, 4], '2..5' -> [2, 3, 4, 5]"""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            values = list(range(int(lo), int(hi) + 1))
        else:
            values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ArgumentError(f"cannot read integers from {text!r}")
    if not values:
        raise ArgumentError(f"empty range {text!r}")
    return values


def parse_grid(text: str) -> List[float]:
    """'start:stop:count' (inclusive linspace) or a comma separated list"""
    try:
        if ":" in text:
            start, stop, count = text.split(":")
            if int(count) < 1:
                raise ArgumentError("grid needs at least one point")
            return [float(x) for x in np.linspace(float(start), float(stop), int(count))]
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ArgumentError(f"cannot read a radius grid from {text!r}")


def parse_point(text: str) -> List[List[complex]]:
    """Scalar point, rows separated by ';' and entries by ',': '0.1,0.2j;0.3'"""
    try:
        return [[complex(x.strip().replace(" ", "")) for x in row.split(",")] for row in text.split(";")]
    except ValueError:
        raise ArgumentError(f"cannot read a point from {text!r}")


def parse_perturb(items: Optional[Sequence[str]]) -> Dict[str, float]:
    """['landau_op=0.75'] -> {'landau_op': 0.75}"""
    result = {}
    for item in items or []:
        name, sep, factor = item.partition("=")
        if not sep:
            raise ArgumentError(f"perturbation {item!r} must read SUITE=FACTOR")
        try:
            result[name.strip()] = float(factor)
        except ValueError:
            raise ArgumentError(f"perturbation factor {factor!r} is not a number")
    return result


def build_config(args: argparse.Namespace, default_format: str = "csv") -> RunConfig:
    """
    Validated run configuration from parsed flags

    Flags left unset fall back to the settings defaults.
    """
    values = {
        "seed": args.seed,
        "trunc": parse_int_list(args.trunc) if args.trunc else None,
        "headroom": args.headroom,
        "tol": args.tol,
        "trials": args.trials,
        "workers": args.workers,
        "out": args.out,
        "format": args.format or default_format,
        "perturb": parse_perturb(getattr(args, "perturb", None)),
    }
    try:
        return RunConfig(**{key: value for key, value in values.items() if value is not None})
    except ValidationError as e:
        raise ArgumentError(f"invalid options: {str(e)}")


def resolve_truncation(config: RunConfig, F: Union[FreePolynomial, KPluriharmonic]) -> Truncation:
    if config.trunc is None:
        return truncation_for(F, config.headroom)
    try:
        return Truncation(degrees=tuple(config.trunc), alphabet_sizes=F.alphabet_sizes)
    except ValidationError as e:
        raise ArgumentError(f"truncation {config.trunc} does not fit alphabets {F.alphabet_sizes}: {str(e)}")
