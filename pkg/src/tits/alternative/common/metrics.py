"""Timing and counters for analysis runs."""

import logging
import time
from typing import Any, Dict, Optional


class AnalysisMetrics:
    """Times one CLI operation and logs what it counted.

    ``Starting <name>`` is logged on entry and ``Completed <name> in ...`` on
    exit, also when the body raises. Counters from :meth:`record` ride along
    in ``extra``. Timings stay out of reports so repeated runs print the same
    result.
    """

    def __init__(self, name: str, logger: Optional[logging.Logger] = None):
        self.name = name
        self.logger = logger or logging.getLogger(__name__)
        self.stats: Dict[str, Any] = {}
        self._started = 0.0

    def __enter__(self) -> "AnalysisMetrics":
        self.logger.info(f"Starting {self.name}")
        self._started = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        elapsed = time.perf_counter() - self._started
        self.stats["duration"] = elapsed
        outcome = "ok" if exc_type is None else exc_type.__name__
        self.logger.info(
            f"Completed {self.name} in {elapsed:.3f} seconds",
            extra={"operation": self.name, "outcome": outcome, **self.stats},
        )

    def record(self, metric: str, value: Any) -> None:
        """Store a counter for the completion line."""
        self.stats[metric] = value
        self.logger.debug(f"Recorded metric {metric}={value} for {self.name}")
