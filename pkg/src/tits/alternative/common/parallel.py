"""Deterministic fan-out over a thread pool."""

import logging
from concurrent.futures import Future, ThreadPoolExecutor
from typing import Callable, Sequence, TypeVar

from tits.alternative.common.batch_processor import BatchProcessor

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def _run_batch(func: Callable[[T], R], batch: Sequence[T]) -> list[R]:
    return [func(item) for item in batch]


def ordered_map(func: Callable[[T], R], items: Sequence[T], threads: int = 1, batch_size: int = 16) -> list[R]:
    """Apply ``func`` to every item and return results in input order.

    With ``threads <= 1`` everything runs inline. Otherwise the items are cut
    into batches that run on a thread pool; results are reassembled by batch
    index, so the output never depends on scheduling. The first exception
    raised by ``func`` (in input order) propagates.

    Args:
        func: Pure function of one item.
        items: Work items.
        threads: Worker count.
        batch_size: Items per submitted task.

    Raises:
        ValueError: ``threads`` is not positive.
    """
    if threads <= 0:
        raise ValueError("threads must be greater than 0")
    if threads == 1 or len(items) <= 1:
        return [func(item) for item in items]

    futures: list[Future[list[R]]] = []
    with ThreadPoolExecutor(max_workers=threads) as executor:
        for batch in BatchProcessor(items, batch_size=batch_size):
            futures.append(executor.submit(_run_batch, func, batch))
        results: list[R] = []
        for future in futures:
            results.extend(future.result())
    logger.debug("Parallel map finished", extra={"items": len(items), "threads": threads, "batches": len(futures)})
    return results
