"""
Residue rings, finite direct products and truncated eventually-constant sequences.
"""
from typing import List, Sequence

import numpy as np

from src.constructions.base import RingBuilder
from src.core.errors import DescriptorError
from src.core.ring import FiniteRing, Index
from src.models.descriptor import RingDescriptor, RingKind


class ZnRing(FiniteRing):
    formula = "Z_n: residues 0..n-1 with addition and multiplication mod n"

    def __init__(self, n: int, descriptor: RingDescriptor = None):
        if n < 2:
            raise DescriptorError(f"Z_n needs n >= 2, got {n}")
        super().__init__(descriptor or RingDescriptor(kind=RingKind.ZN, n=n), (n,), ("r",))
        self.n = n
        self.zero = 0
        self.one = 1

    def _add(self, i: Index, j: Index) -> Index:
        return (i + j) % self.n

    def _mul(self, i: Index, j: Index) -> Index:
        return (i * j) % self.n

    def _neg(self, i: Index) -> Index:
        return (-i) % self.n

    def label(self, index: int) -> str:
        return str(int(index))


class ProductRing(FiniteRing):
    formula = "R_1 × ... × R_m: componentwise addition and multiplication"

    def __init__(self, descriptor: RingDescriptor, factors: Sequence[FiniteRing]):
        self.factors: List[FiniteRing] = list(factors)
        super().__init__(descriptor, [f.order for f in self.factors],
                         [f"r{k}" for k in range(len(self.factors))])
        self.zero = self.radix.encode_tuple([f.zero for f in self.factors])
        self.one = self.radix.encode_tuple([f.one for f in self.factors])

    def _componentwise(self, op: str, i: Index, j: Index) -> Index:
        left = self.radix.decode(i)
        right = self.radix.decode(j)
        return self.radix.encode([getattr(f, op)(x, y) for f, x, y in zip(self.factors, left, right)])

    def _add(self, i: Index, j: Index) -> Index:
        return self._componentwise("_add", i, j)

    def _mul(self, i: Index, j: Index) -> Index:
        return self._componentwise("_mul", i, j)

    def _neg(self, i: Index) -> Index:
        return self.radix.encode([f._neg(x) for f, x in zip(self.factors, self.radix.decode(i))])

    def project(self, index: Index, k: int) -> Index:
        return self.radix.decode(index)[k]

    def label(self, index: int) -> str:
        parts = [f.label(c) for f, c in zip(self.factors, self.coords(index))]
        return "(" + ", ".join(parts) + ")"


class TruncatedSequenceRing(ProductRing):
    """Level-n truncation R^n × S of the ring of eventually constant sequences.

    Coordinates ``0..n-1`` are the free prefix over R; the last coordinate is
    the constant tail over S.
    """

    formula = "T_n[R, S] = R^n × S, componentwise; the last coordinate is the constant tail"

    def __init__(self, descriptor: RingDescriptor, r: FiniteRing, s: FiniteRing, length: int):
        super().__init__(descriptor, [r] * length + [s])
        self.length = length
        self.prefix_ring = r
        self.tail_ring = s

    def label(self, index: int) -> str:
        coords = self.coords(index)
        head = ", ".join(self.prefix_ring.label(c) for c in coords[:-1])
        tail = self.tail_ring.label(coords[-1])
        return f"({head}; {tail}, {tail}, ...)"


class ZnBuilder(RingBuilder):
    kind = RingKind.ZN
    formula = ZnRing.formula
    ref = r'§1, "Let $\Bbb Z$ and $\Bbb Z_n$ denote the ring of integers and the"'

    def predicted_order(self, descriptor, bases) -> int:
        return int(descriptor.n)

    def realize(self, descriptor, bases) -> FiniteRing:
        return ZnRing(int(descriptor.n), descriptor)


class ProductBuilder(RingBuilder):
    kind = RingKind.PRODUCT
    formula = ProductRing.formula
    ref = r'§2, "Then $R^{qnil} = \prod_{i\in"'

    def dependencies(self, descriptor):
        return list(descriptor.factors or [])

    def predicted_order(self, descriptor, bases) -> int:
        return int(np.prod([b.order for b in bases], dtype=object))

    def realize(self, descriptor, bases) -> FiniteRing:
        return ProductRing(descriptor, bases)


class TruncatedSequenceBuilder(RingBuilder):
    kind = RingKind.T_TRUNC
    formula = TruncatedSequenceRing.formula
    ref = '§2, "ring under the componentwise addition"'

    def dependencies(self, descriptor):
        return [descriptor.base, descriptor.sub]

    def predicted_order(self, descriptor, bases) -> int:
        r, s = bases
        return r.order ** int(descriptor.n) * s.order

    def realize(self, descriptor, bases) -> FiniteRing:
        r, s = bases
        return TruncatedSequenceRing(descriptor, r, s, int(descriptor.n))
