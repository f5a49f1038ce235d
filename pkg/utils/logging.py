"""Logging utilities shared by the command line and the sweep runner."""

import logging
import sys
from typing import Optional

_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
_handler: Optional[logging.StreamHandler] = None


def configure_logging(level: Optional[str] = None) -> None:
    """Install a single stderr handler on the package root logger.

    Repeated calls re-point the handler at the current ``sys.stderr``.
    """
    global _handler
    root = logging.getLogger("witness")
    if _handler is None:
        _handler = logging.StreamHandler(sys.stderr)
        _handler.setFormatter(logging.Formatter(_FORMAT))
        root.addHandler(_handler)
        root.propagate = False
    else:
        _handler.stream = sys.stderr
    if level:
        root.setLevel(level.upper())


def get_logger(name: str) -> logging.Logger:
    """Return a child of the package logger, e.g. ``witness.sweep``."""
    return logging.getLogger(f"witness.{name}")
