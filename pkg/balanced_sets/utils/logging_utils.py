"""Utility module for configuring application logging.

This helper provides a single :func:`configure_logging` function that sets up
the Python ``logging`` module with sensible defaults.  It is used by the
command-line front-end and can be imported by scripts driving the library so
log formatting stays consistent.  Records go to stderr because stdout carries
the analysis reports.
"""

import logging
import sys
from typing import Optional


def configure_logging(
    level: int = logging.INFO,
    log_format: Optional[str] = None,
    log_file: Optional[str] = None,
) -> None:
    """Configure basic logging for the application.

    Parameters
    ----------
    level:
        Logging level to use. Defaults to ``logging.INFO``.
    log_format:
        Optional logging format string. If not provided, a reasonable
        default is used.
    log_file:
        Optional path of a plain-text log file written next to the stream
        output.
    """
    if log_format is None:
        # Default layout includes time, logger name and severity level
        log_format = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    handlers = []

    stream_handler = logging.StreamHandler(sys.stderr)
    if sys.stderr.isatty():
        white = "\033[97m"
        reset = "\033[0m"
        stream_handler.setFormatter(logging.Formatter(f"{white}{log_format}{reset}"))
    else:
        stream_handler.setFormatter(logging.Formatter(log_format))
    handlers.append(stream_handler)

    if log_file:
        file_handler = logging.FileHandler(log_file)
        file_handler.setFormatter(logging.Formatter(log_format))
        handlers.append(file_handler)

    # ``force`` lets repeated CLI invocations in one process reconfigure cleanly
    logging.basicConfig(level=level, handlers=handlers, force=True)
