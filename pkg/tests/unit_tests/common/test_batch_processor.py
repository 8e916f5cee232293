import pytest

from tits.alternative.common import BatchProcessor, ordered_map


class TestBatchProcessor:
    def test_batch_processing(self):
        """Test that data is properly batched."""
        data = list(range(10))
        processor = BatchProcessor(data, batch_size=3)

        batches = list(processor)
        assert len(batches) == 4
        assert batches[0] == [0, 1, 2]
        assert batches[1] == [3, 4, 5]
        assert batches[2] == [6, 7, 8]
        assert batches[3] == [9]

    def test_empty_data(self):
        """Test that empty data produces no batches."""
        assert list(BatchProcessor([], batch_size=5)) == []

    def test_batch_size_larger_than_data(self):
        batches = list(BatchProcessor(list(range(5)), batch_size=10))
        assert batches == [[0, 1, 2, 3, 4]]

    def test_tuples_stay_tuples(self):
        batches = list(BatchProcessor(("a", "b", "c"), batch_size=2))
        assert batches == [("a", "b"), ("c",)]

    def test_len_counts_batches(self):
        assert len(BatchProcessor(list(range(10)), batch_size=3)) == 4
        assert len(BatchProcessor([], batch_size=3)) == 0

    def test_rejects_invalid_batch_size(self):
        with pytest.raises(ValueError, match="batch_size"):
            BatchProcessor([1], batch_size=0)


class TestOrderedMap:
    def test_inline(self):
        assert ordered_map(lambda x: x * x, [3, 1, 2]) == [9, 1, 4]

    @pytest.mark.parametrize("threads", [2, 4, 8])
    def test_threads_keep_input_order(self, threads):
        items = list(range(100))
        assert ordered_map(str, items, threads=threads, batch_size=7) == [str(i) for i in items]

    def test_empty(self):
        assert ordered_map(str, [], threads=4) == []

    def test_first_error_propagates(self):
        def explode(x):
            if x >= 5:
                raise KeyError(x)
            return x

        with pytest.raises(KeyError) as excinfo:
            ordered_map(explode, list(range(20)), threads=3, batch_size=4)
        assert excinfo.value.args[0] in range(5, 8)

    def test_threads_must_be_positive(self):
        with pytest.raises(ValueError, match="threads"):
            ordered_map(str, [1], threads=0)
