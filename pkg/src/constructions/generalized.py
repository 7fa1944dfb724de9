"""
Generalized matrix rings K_s(R).
"""
from typing import List, Sequence, Tuple

from src.constructions.base import RingBuilder
from src.constructions.matrix import central_parameter
from src.core.derived import units
from src.core.ring import FiniteRing, Index
from src.models.descriptor import RingDescriptor, RingKind


class GeneralizedMatrixRing(FiniteRing):
    """2×2 matrices (a, x, y, b) = [[a,x],[y,b]] whose corner products are twisted by s."""

    formula = ("K_s(R): [[a1,x1],[y1,b1]]·[[a2,x2],[y2,b2]] = "
               "[[a1a2 + s·x1y2, a1x2 + x1b2], [y1a2 + b1y2, s·y1x2 + b1b2]], s ∈ C(R)")

    def __init__(self, descriptor: RingDescriptor, base: FiniteRing, s: int):
        self.base = base
        self.s = s
        super().__init__(descriptor, (base.order,) * 4, ("a", "x", "y", "b"))
        self.zero = self.radix.encode_tuple((base.zero,) * 4)
        self.one = self.radix.encode_tuple((base.one, base.zero, base.zero, base.one))
        if s not in units(base):
            self.notes.append(f"s = {base.label(s)} is not a unit; the twisted product is used as given")

    def _add(self, i: Index, j: Index) -> Index:
        return self.radix.encode([self.base._add(u, v) for u, v in zip(self.radix.decode(i), self.radix.decode(j))])

    def _neg(self, i: Index) -> Index:
        return self.radix.encode([self.base._neg(u) for u in self.radix.decode(i)])

    def _mul(self, i: Index, j: Index) -> Index:
        R = self.base
        a1, x1, y1, b1 = self.radix.decode(i)
        a2, x2, y2, b2 = self.radix.decode(j)
        top_left = R._add(R._mul(a1, a2), R._mul(self.s, R._mul(x1, y2)))
        top_right = R._add(R._mul(a1, x2), R._mul(x1, b2))
        bottom_left = R._add(R._mul(y1, a2), R._mul(b1, y2))
        bottom_right = R._add(R._mul(self.s, R._mul(y1, x2)), R._mul(b1, b2))
        return self.radix.encode([top_left, top_right, bottom_left, bottom_right])

    def blocks(self, index: int) -> Tuple[int, int, int, int]:
        """Entries (a, b, c, d) of [[a,b],[c,d]]."""
        return self.coords(index)

    def matrix_entries(self, index: int) -> List[List[int]]:
        a, b, c, d = self.coords(index)
        return [[a, b], [c, d]]

    def from_blocks(self, entries: Sequence[int]) -> int:
        return self.element(list(entries))

    def label(self, index: int) -> str:
        rows = self.matrix_entries(index)
        return "[" + ",".join("[" + ",".join(self.base.label(v) for v in row) + "]" for row in rows) + "]"


class GeneralizedMatrixBuilder(RingBuilder):
    kind = RingKind.KS
    formula = GeneralizedMatrixRing.formula
    ref = r'§4, "is called a {\it generalized matrix ring"'

    def predicted_order(self, descriptor, bases) -> int:
        return bases[0].order ** 4

    def realize(self, descriptor, bases) -> FiniteRing:
        base = bases[0]
        s = central_parameter(base, descriptor.s, "s")
        return GeneralizedMatrixRing(descriptor, base, s)
