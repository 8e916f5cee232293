"""Shared utilities: batching, parallel mapping and metrics."""

from tits.alternative.common.batch_processor import BatchProcessor
from tits.alternative.common.metrics import AnalysisMetrics
from tits.alternative.common.parallel import ordered_map

__all__ = ["AnalysisMetrics", "BatchProcessor", "ordered_map"]
