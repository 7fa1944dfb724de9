"""
Mixed-radix codec between coordinate tuples and dense element indexes.
"""
from typing import List, Sequence, Tuple, Union

import numpy as np

IndexLike = Union[int, np.ndarray]


class MixedRadix:
    """Big-endian mixed-radix encoding: the first coordinate is most significant.

    Ascending index order therefore coincides with lexicographic order on
    coordinate tuples. ``encode`` and ``decode`` work on plain integers and on
    numpy index arrays alike.
    """

    def __init__(self, radices: Sequence[int]):
        if not radices:
            raise ValueError("at least one radix is required")
        if any(int(r) < 1 for r in radices):
            raise ValueError(f"radices must be positive, got {list(radices)}")
        self.radices: Tuple[int, ...] = tuple(int(r) for r in radices)
        weights: List[int] = []
        weight = 1
        for radix in reversed(self.radices):
            weights.append(weight)
            weight *= radix
        self.weights: Tuple[int, ...] = tuple(reversed(weights))
        self.size = weight

    def __len__(self) -> int:
        return len(self.radices)

    def encode(self, coords: Sequence[IndexLike]) -> IndexLike:
        total: IndexLike = 0
        for coord, weight in zip(coords, self.weights):
            total = total + coord * weight
        return total

    def decode(self, index: IndexLike) -> List[IndexLike]:
        return [(index // weight) % radix for weight, radix in zip(self.weights, self.radices)]

    def decode_tuple(self, index: int) -> Tuple[int, ...]:
        index = int(index)
        if not 0 <= index < self.size:
            raise ValueError(f"index {index} outside 0..{self.size - 1}")
        return tuple(int(c) for c in self.decode(index))

    def encode_tuple(self, coords: Sequence[int]) -> int:
        if len(coords) != len(self.radices):
            raise ValueError(f"expected {len(self.radices)} coordinates, got {len(coords)}")
        for coord, radix in zip(coords, self.radices):
            if not 0 <= int(coord) < radix:
                raise ValueError(f"coordinate {coord} outside 0..{radix - 1}")
        return int(self.encode([int(c) for c in coords]))
