"""
CLI Router - Main parser that includes all sub-commands
"""

import argparse
import logging
import sys
from typing import List, Optional

from polybohr import __version__
from polybohr.cli.commands import curve, evaluate, radii, verify
from polybohr.cli.deps import common_parser
from polybohr.core.exceptions import PolyBohrError
from polybohr.core.logging_config import setup_logging

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polybohr",
        description="Bohr inequalities on noncommutative polyballs at finite truncation",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True
    parents = [common_parser()]

    radii.register(subparsers, parents)  # radii, bounds
    curve.register(subparsers, parents)  # curve
    evaluate.register(subparsers, parents)  # norm, numrad, eval
    verify.register(subparsers, parents)  # verify, suites
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments and dispatch to the command handler

    Returns:
        int: 0 on success, 1 when a verification suite failed, 2 on bad input
        or a numerical failure
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.log_level)
    try:
        return args.handler(args)
    except PolyBohrError as e:
        logger.error(f"{args.command} failed: {str(e)}")
        print(f"✗ {str(e)}", file=sys.stderr)
        return 2
