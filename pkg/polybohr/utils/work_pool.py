"""
Ordered work pool
Runs independent tasks on a thread pool and returns results in input order
"""

import logging
from concurrent.futures import Future, ThreadPoolExecutor
from typing import Callable, Dict, Iterable, List, Optional, TypeVar

from polybohr.core.config import settings

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def map_ordered(func: Callable[[T], R], items: Iterable[T], workers: Optional[int] = None) -> List[R]:
    """
    Apply func to every item, possibly in parallel

    Results are ordered by input index, independent of completion order.
    With one worker the items run serially in the calling thread.

    Args:
        func: Pure function of one item
        items: Inputs
        workers: Thread count, settings.WORKERS when None

    Returns:
        list: func(item) for each item, in input order
    """
    items = list(items)
    workers = settings.WORKERS if workers is None else workers
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]

    futures: Dict[int, Future] = {}
    with ThreadPoolExecutor(max_workers=workers) as executor:
        for index, item in enumerate(items):
            futures[index] = executor.submit(func, item)
        results: List[R] = []
        for index in range(len(items)):
            try:
                results.append(futures[index].result())
            except Exception as e:
                logger.error(f"task {index} failed: {str(e)}")
                raise
    return results
