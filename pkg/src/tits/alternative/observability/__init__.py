"""Structured logging for the toolkit."""

from tits.alternative.observability.formatters import StructuredFormatter
from tits.alternative.observability.logging import StderrLoggerProvider, setup_logging

__all__ = ["StderrLoggerProvider", "StructuredFormatter", "setup_logging"]
