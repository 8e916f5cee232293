"""Logging setup for the command line: one stderr handler on the package logger."""

import logging
import sys
from typing import Optional

from tits.alternative.observability.formatters import StructuredFormatter

PACKAGE_LOGGER = "tits.alternative"

TEXT_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class StderrLoggerProvider:
    """Creates the stderr handler; stdout is reserved for results."""

    def setup_handler(self, level: int = logging.INFO) -> logging.Handler:
        """A StreamHandler on the current ``sys.stderr``."""
        handler = logging.StreamHandler(sys.stderr)
        handler.setLevel(level)
        return handler

    def flush(self) -> None:
        """Nothing is buffered."""


def setup_logging(
    level: str = "WARNING",
    structured: bool = False,
    formatter: Optional[logging.Formatter] = None,
    provider: Optional[StderrLoggerProvider] = None,
) -> logging.Logger:
    """Install a single handler on the ``tits.alternative`` logger.

    Args:
        level: Logging level name (DEBUG, INFO, WARNING, ERROR).
        structured: Emit JSON lines through :class:`StructuredFormatter`.
        formatter: Custom formatter; overrides ``structured``.
        provider: Handler factory, stderr by default.

    Returns:
        The configured package logger.
    """
    numeric_level = getattr(logging, level.upper())
    package_logger = logging.getLogger(PACKAGE_LOGGER)
    for h in package_logger.handlers[:]:
        h.close()
        package_logger.removeHandler(h)
    package_logger.setLevel(numeric_level)
    package_logger.propagate = False

    if formatter is None:
        formatter = StructuredFormatter() if structured else logging.Formatter(TEXT_FORMAT)
    handler = (provider or StderrLoggerProvider()).setup_handler(numeric_level)
    handler.setFormatter(formatter)
    package_logger.addHandler(handler)
    package_logger.debug("Logging configured", extra={"log_level": level.upper(), "structured": structured})
    return package_logger
