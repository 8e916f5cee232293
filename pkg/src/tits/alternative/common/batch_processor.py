"""Fixed-size chunking of work items."""

from typing import Generic, Iterator, Sequence, TypeVar

T = TypeVar("T")


class BatchProcessor(Generic[T]):
    """Slices a sequence into consecutive chunks of ``batch_size`` items.

    Slicing keeps the sequence type, so tuples of vertex ids come back as
    tuples. Only the last chunk may be short.
    """

    def __init__(self, data: Sequence[T], batch_size: int = 100):
        if batch_size <= 0:
            raise ValueError(f"batch_size must be positive, got {batch_size}")
        self.data = data
        self.batch_size = batch_size

    def __len__(self) -> int:
        return -(-len(self.data) // self.batch_size)

    def __iter__(self) -> Iterator[Sequence[T]]:
        size = self.batch_size
        for start in range(0, len(self.data), size):
            yield self.data[start : start + size]
