"""
Radius table and closed-form bound commands
"""

import argparse
import math
from typing import Dict, List

from polybohr.cli.deps import build_config, parse_int_list
from polybohr.core.exceptions import ArgumentError
from polybohr.repositories.report_repo import render_table, write_text
from polybohr.services.radius_service import closed_bounds, solve_gamma_k, solve_t_k0, solve_t_m
from polybohr.utils.work_pool import map_ordered

RADII_COLUMNS = [
    "row", "index", "one_minus_two_thirds_root", "gamma_k", "inv_three_sqrt_k", "log_upper",
    "zero_sqrt_root", "inv_two_sqrt_k", "t_k0", "t_m",
]

RADII_EPILOG = """CSV columns:
  row                        k or m
  index                      value of k (or m)
  one_minus_two_thirds_root  1 - (2/3)^(1/k)
  gamma_k                    root of sum binom(m+k-1,k-1)^(1/2) r^m = 1/2
  inv_three_sqrt_k           1/(3 sqrt k)
  log_upper                  2 sqrt(log k)/sqrt k (empty for k = 1)
  zero_sqrt_root             sqrt(1 - (1/2)^(1/k))
  inv_two_sqrt_k             1/(2 sqrt k)
  t_k0                       root of the same series = 1
  t_m                        root of sum t^q cos(pi/(floor(m/q)+2)) = 1/2
"""


def _k_row(k: int) -> Dict:
    return {
        "row": "k",
        "index": k,
        "one_minus_two_thirds_root": 1.0 - (2.0 / 3.0) ** (1.0 / k),
        "gamma_k": solve_gamma_k(k).value,
        "inv_three_sqrt_k": 1.0 / (3.0 * math.sqrt(k)),
        "log_upper": 2.0 * math.sqrt(math.log(k)) / math.sqrt(k) if k > 1 else None,
        "zero_sqrt_root": math.sqrt(1.0 - 0.5 ** (1.0 / k)),
        "inv_two_sqrt_k": 1.0 / (2.0 * math.sqrt(k)),
        "t_k0": solve_t_k0(k).value,
    }


def _m_row(m: int) -> Dict:
    return {"row": "m", "index": m, "t_m": solve_t_m(m).value}


def run_radii(args: argparse.Namespace) -> int:
    """Radius table, one row per k then one row per m"""
    config = build_config(args)
    ks = parse_int_list(args.k)
    ms = parse_int_list(args.m) if args.m else []
    if min(ks) < 1 or (ms and min(ms) < 1):
        raise ArgumentError("k and m must be >= 1")
    rows: List[Dict] = map_ordered(_k_row, ks, config.workers) + map_ordered(_m_row, ms, config.workers)
    write_text(render_table(rows, RADII_COLUMNS, config.format), config.out)
    return 0


def run_bounds(args: argparse.Namespace) -> int:
    """closed_bounds(k) for every requested k"""
    config = build_config(args)
    ks = parse_int_list(args.k)
    records = map_ordered(closed_bounds, ks, config.workers)
    rows = [r.model_dump() for r in records]
    write_text(render_table(rows, list(rows[0].keys()), config.format), config.out)
    return 0


def register(subparsers: argparse._SubParsersAction, parents: List[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser("radii", parents=parents, help="Bohr radius table",
                                   epilog=RADII_EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--k", default="1..10", help="k values, e.g. 1..10 or 1,2,5")
    parser.add_argument("--m", default="", help="m values for t_m, e.g. 2..20")
    parser.set_defaults(handler=run_radii)

    parser = subparsers.add_parser("bounds", parents=parents, help="Closed-form bounds on the radii for k factors")
    parser.add_argument("--k", default="1", help="k values, e.g. 1..10")
    parser.set_defaults(handler=run_bounds)
