"""
Verification commands - Run the inequality suites and list them
"""

import argparse
import logging
from typing import List

from polybohr.cli.deps import build_config
from polybohr.core.exceptions import ArgumentError
from polybohr.repositories.report_repo import render_reports, render_table, write_text
from polybohr.services.verification_service import SUITES, run_suites

logger = logging.getLogger(__name__)

VERIFY_EPILOG = """\
JSON output: one report per suite with suite, seed, trials, cases_run,
tolerance, rhs_scale, violations, max_slack_used, probes and passed.
CSV output: one summary row per suite.
Exit status 1 when any suite reports a violation.

--perturb SUITE=FACTOR multiplies that suite's right-hand sides by FACTOR;
a factor below 1 is a negative control that should produce violations.
--trunc and --headroom are rejected; suite truncations follow
POLYBOHR_SUITE_HEADROOM."""


def run_verify(args: argparse.Namespace) -> int:
    # suite samples size their own truncations from settings.SUITE_HEADROOM
    unused = [flag for flag, value in (("--trunc", args.trunc), ("--headroom", args.headroom)) if value is not None]
    if unused:
        raise ArgumentError(f"verify does not take {', '.join(unused)}, set POLYBOHR_SUITE_HEADROOM instead")
    config = build_config(args, default_format="json")
    reports = run_suites(
        names=args.suites,
        seed=config.seed,
        trials=config.trials,
        tol=config.tol,
        perturb=config.perturb,
        workers=config.workers,
    )
    write_text(render_reports(reports, config.format), config.out)
    failed = [r.suite for r in reports if not r.passed]
    if failed:
        logger.warning(f"Suites with violations: {failed}")
        return 1
    logger.info(f"All {len(reports)} suites passed")
    return 0


def run_list(args: argparse.Namespace) -> int:
    config = build_config(args)
    rows = [{"suite": name, "description": (fn.__doc__ or "").strip().split("\n")[0]} for name, fn in SUITES.items()]
    write_text(render_table(rows, ["suite", "description"], config.format), config.out)
    return 0


def register(subparsers: argparse._SubParsersAction, parents: List[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser("verify", parents=parents, help="Run verification suites",
                                   epilog=VERIFY_EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("suites", nargs="*", help="Suite names (default: all)")
    parser.add_argument("--perturb", action="append", default=[], metavar="SUITE=FACTOR",
                        help="Scale a suite's right-hand sides (repeatable)")
    parser.set_defaults(handler=run_verify)

    parser = subparsers.add_parser("suites", parents=parents, help="List the verification suites")
    parser.set_defaults(handler=run_list)
