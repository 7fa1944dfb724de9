import numpy as np
import pytest

from src.core.encoding import MixedRadix


class TestMixedRadix:
    """Mixed-radix index encoding."""

    def test_big_endian_layout(self):
        radix = MixedRadix((4, 2, 2))
        assert radix.size == 16
        assert radix.weights == (4, 2, 1)
        assert radix.encode_tuple((1, 0, 0)) == 4
        assert radix.encode_tuple((0, 1, 0)) == 2
        assert radix.decode_tuple(11) == (2, 1, 1)

    def test_last_coordinate_varies_fastest(self):
        radix = MixedRadix((2, 3))
        assert [radix.decode_tuple(i) for i in range(4)] == [(0, 0), (0, 1), (0, 2), (1, 0)]

    def test_arrays_broadcast(self):
        radix = MixedRadix((4, 4))
        indexes = np.arange(16)
        first, second = radix.decode(indexes)
        assert np.array_equal(first, indexes // 4)
        assert np.array_equal(second, indexes % 4)
        assert np.array_equal(radix.encode([first, second]), indexes)

    def test_single_radix(self):
        radix = MixedRadix((7,))
        assert len(radix) == 1
        assert radix.decode_tuple(5) == (5,)

    def test_invalid_radices(self):
        with pytest.raises(ValueError):
            MixedRadix(())
        with pytest.raises(ValueError):
            MixedRadix((3, 0))

    def test_out_of_range(self):
        radix = MixedRadix((2, 2))
        with pytest.raises(ValueError):
            radix.decode_tuple(4)
        with pytest.raises(ValueError):
            radix.encode_tuple((2, 0))
        with pytest.raises(ValueError):
            radix.encode_tuple((1,))
