"""
Immutable sets of ring elements backed by boolean masks.
"""
from typing import TYPE_CHECKING, Iterable, Iterator, List, Tuple

import numpy as np

if TYPE_CHECKING:
    from src.core.ring import FiniteRing


class ElementSet:
    """Set of element indexes with O(1) membership and ascending iteration."""

    __slots__ = ("ring", "mask", "_indexes")

    def __init__(self, ring: "FiniteRing", mask: np.ndarray):
        mask = np.asarray(mask, dtype=bool)
        if mask.shape != (ring.order,):
            raise ValueError(f"mask of shape {mask.shape} does not fit a ring of order {ring.order}")
        mask = mask.copy()
        mask.setflags(write=False)
        self.ring = ring
        self.mask = mask
        indexes = np.flatnonzero(mask).astype(np.int64)
        indexes.setflags(write=False)
        self._indexes = indexes

    @classmethod
    def from_indexes(cls, ring: "FiniteRing", indexes: Iterable[int]) -> "ElementSet":
        mask = np.zeros(ring.order, dtype=bool)
        idx = np.fromiter((int(i) for i in indexes), dtype=np.int64)
        if idx.size and (idx.min() < 0 or idx.max() >= ring.order):
            raise ValueError(f"element index outside 0..{ring.order - 1}")
        mask[idx] = True
        return cls(ring, mask)

    @classmethod
    def full(cls, ring: "FiniteRing") -> "ElementSet":
        return cls(ring, np.ones(ring.order, dtype=bool))

    @property
    def indexes(self) -> np.ndarray:
        return self._indexes

    @property
    def members(self) -> Tuple[int, ...]:
        return tuple(int(i) for i in self._indexes)

    def __contains__(self, index: object) -> bool:
        try:
            i = int(index)  # type: ignore[arg-type]
        except (TypeError, ValueError):
            return False
        return 0 <= i < self.ring.order and bool(self.mask[i])

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return int(self._indexes.size)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ElementSet):
            return NotImplemented
        return self.ring is other.ring and bool(np.array_equal(self.mask, other.mask))

    def __hash__(self) -> int:
        return hash((id(self.ring), self.mask.tobytes()))

    def __repr__(self) -> str:
        return f"ElementSet({self.ring.name}, {len(self)} elements)"

    def issubset(self, other: "ElementSet") -> bool:
        return bool(np.all(other.mask[self.mask]))

    def __and__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.ring, self.mask & other.mask)

    def __or__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.ring, self.mask | other.mask)

    def __sub__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.ring, self.mask & ~other.mask)

    def complement(self) -> "ElementSet":
        return ElementSet(self.ring, ~self.mask)

    def labels(self) -> List[str]:
        return self.ring.labels(self._indexes)
