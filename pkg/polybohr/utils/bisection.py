"""
Bisection for strictly increasing functions
"""

import logging
from typing import Callable, Tuple

import numpy as np

from polybohr.core.exceptions import ArgumentError, MonotonicityError

logger = logging.getLogger(__name__)


def check_increasing(func: Callable[[float], float], lo: float, hi: float, samples: int = 65) -> None:
    """
    Sample func on [lo, hi] and require strictly increasing values

    Raises:
        MonotonicityError: if two consecutive samples do not increase
    """
    xs = np.linspace(lo, hi, samples)
    ys = [func(float(x)) for x in xs]
    for (x0, y0), (x1, y1) in zip(zip(xs, ys), zip(xs[1:], ys[1:])):
        if not y1 > y0:
            raise MonotonicityError(f"function not increasing between {x0:.6g} ({y0:.6g}) and {x1:.6g} ({y1:.6g})")


def bisect_increasing(
    func: Callable[[float], float],
    target: float,
    lo: float,
    hi: float,
    arg_tol: float,
    value_tol: float,
    max_iter: int,
) -> Tuple[float, float, Tuple[float, float], int]:
    """
    Solve func(x) = target for a strictly increasing func on [lo, hi]

    Halves the bracket until it is narrower than arg_tol and the residual is
    below value_tol, or until the bracket stops shrinking in floating point.

    Args:
        func: Strictly increasing function
        target: Value to reach
        lo: Left end, func(lo) <= target
        hi: Right end, func(hi) >= target
        arg_tol: Bracket width to reach
        value_tol: Residual |func(x) - target| to reach
        max_iter: Iteration cap

    Returns:
        tuple: (root, residual, final bracket, iterations)
    """
    f_lo, f_hi = func(lo) - target, func(hi) - target
    if f_lo > 0 or f_hi < 0:
        raise ArgumentError(f"target {target} not bracketed by [{lo}, {hi}]")
    if f_lo == 0:
        return lo, 0.0, (lo, lo), 0
    if f_hi == 0:
        return hi, 0.0, (hi, hi), 0

    best_x, best_res = (lo, -f_lo) if -f_lo <= f_hi else (hi, f_hi)
    iterations = 0
    while iterations < max_iter:
        iterations += 1
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        f_mid = func(mid) - target
        if abs(f_mid) < best_res:
            best_x, best_res = mid, abs(f_mid)
        if f_mid == 0:
            lo = hi = mid
            break
        if f_mid < 0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= arg_tol and best_res <= value_tol:
            break
    logger.debug(f"bisection stopped after {iterations} iterations at {best_x:.15g}, residual {best_res:.3e}")
    return best_x, best_res, (min(lo, best_x), max(hi, best_x)), iterations
