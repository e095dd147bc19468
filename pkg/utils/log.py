"""Logging setup for the command-line tool."""

import logging
import sys

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"
PACKAGE_LOGGERS = ('surgery', 'commands', 'utils')

_handler = None


def configure_logging(level: str = "WARNING") -> logging.Handler:
    """Route the package loggers to stderr at the given level.

    Calling it again replaces the handler instead of stacking another one.
    Reports go to stdout, so nothing logged here can corrupt JSONL output.
    """
    global _handler
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    numeric = getattr(logging, str(level).upper(), logging.WARNING)
    for name in PACKAGE_LOGGERS:
        logger = logging.getLogger(name)
        if _handler is not None:
            logger.removeHandler(_handler)
        logger.addHandler(handler)
        logger.setLevel(numeric)
        logger.propagate = False
    _handler = handler
    return handler
