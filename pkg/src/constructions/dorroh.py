"""
Dorroh extensions I(R, Z_n).
"""
from typing import Tuple

from src.constructions.base import RingBuilder
from src.core.errors import DescriptorError
from src.core.ring import FiniteRing, Index
from src.models.descriptor import RingDescriptor, RingKind


class DorrohRing(FiniteRing):
    """Pairs (a, b) ∈ R × Z_n with the integer action of Z_n on R."""

    formula = "I(R, Z_n): (a1,b1)(a2,b2) = (a1a2 + b1·a2 + b2·a1, b1b2), identity (0, 1)"

    def __init__(self, descriptor: RingDescriptor, algebra: FiniteRing, n: int):
        if n < 2:
            raise DescriptorError(f"Dorroh scalars Z_n need n >= 2, got {n}")
        if algebra.times(n, algebra.one) != algebra.zero:
            raise DescriptorError(
                f"additive exponent of {algebra.name} (characteristic {algebra.characteristic}) "
                f"does not divide n = {n}"
            )
        self.algebra = algebra
        self.n = n
        super().__init__(descriptor, (algebra.order, n), ("a", "b"))
        self.zero = self.radix.encode_tuple((algebra.zero, 0))
        self.one = self.radix.encode_tuple((algebra.zero, 1))

    def _add(self, i: Index, j: Index) -> Index:
        a1, b1 = self.radix.decode(i)
        a2, b2 = self.radix.decode(j)
        return self.radix.encode([self.algebra._add(a1, a2), (b1 + b2) % self.n])

    def _neg(self, i: Index) -> Index:
        a, b = self.radix.decode(i)
        return self.radix.encode([self.algebra._neg(a), (-b) % self.n])

    def _mul(self, i: Index, j: Index) -> Index:
        R = self.algebra
        a1, b1 = self.radix.decode(i)
        a2, b2 = self.radix.decode(j)
        first = R._add(R._add(R._mul(a1, a2), R._times(b1, a2)), R._times(b2, a1))
        return self.radix.encode([first, (b1 * b2) % self.n])

    def split(self, index: int) -> Tuple[int, int]:
        return self.coords(index)

    def pair(self, a: int, b: int) -> int:
        return self.radix.encode_tuple((a, b % self.n))

    def fold(self, index: Index) -> Index:
        """a + b·1_R for the pair (a, b)."""
        a, b = self.radix.decode(index)
        return self.algebra._add(a, self.algebra._times(b, self.algebra.one))

    def label(self, index: int) -> str:
        a, b = self.coords(index)
        return f"({self.algebra.label(a)}, {b})"


class DorrohBuilder(RingBuilder):
    kind = RingKind.DORROH
    formula = DorrohRing.formula
    ref = '§2, "(a_1a_2 + b_1a_2 + b_2a_1, b_1b_2)$"'

    def predicted_order(self, descriptor, bases) -> int:
        return bases[0].order * int(descriptor.n)

    def realize(self, descriptor, bases) -> FiniteRing:
        return DorrohRing(descriptor, bases[0], int(descriptor.n))
