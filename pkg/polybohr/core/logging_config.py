"""
Logging configuration
"""

import logging
import sys
from typing import Optional, Union

from polybohr.core.config import settings


def setup_logging(level: Optional[Union[str, int]] = None) -> None:
    """
    Configure package logging

    Command output goes to stdout, so log records are written to stderr.

    Args:
        level: Logging level as string (e.g., 'INFO', 'DEBUG') or None for settings.LOG_LEVEL
    """
    if level is None:
        level = settings.LOG_LEVEL
    if isinstance(level, str):
        log_level = getattr(logging, level.upper(), logging.WARNING)
    else:
        log_level = level if isinstance(level, int) else logging.WARNING

    logging.basicConfig(
        level=log_level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[
            logging.StreamHandler(sys.stderr)
        ],
        force=True,
    )
