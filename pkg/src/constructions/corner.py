"""
Corner rings eRe of an idempotent e.
"""
from typing import Sequence, Tuple

import numpy as np

from src.constructions.base import RingBuilder
from src.core.derived import idempotents
from src.core.errors import DescriptorError, DomainError
from src.core.ring import FiniteRing, Index
from src.models.descriptor import RingDescriptor, RingKind


class CornerRing(FiniteRing):
    """{eae : a ∈ R} with the operations of R and identity e."""

    formula = "eRe = {eae : a ∈ R}, operations of R, identity e"

    def __init__(self, descriptor: RingDescriptor, base: FiniteRing, e: int):
        if e not in idempotents(base):
            raise DescriptorError(f"{base.label(e)} is not an idempotent of {base.name}")
        self.base = base
        self.e = e
        members = np.unique(base.mul_col(e)[base.mul_row(e)])
        members.setflags(write=False)
        self.members = members
        lookup = np.full(base.order, -1, dtype=np.int64)
        lookup[members] = np.arange(members.size)
        self._lookup = lookup
        super().__init__(descriptor, (int(members.size),), ("r",))
        self.zero = int(lookup[base.zero])
        self.one = int(lookup[e])

    def _add(self, i: Index, j: Index) -> Index:
        return self._lookup[self.base._add(self.members[i], self.members[j])]

    def _mul(self, i: Index, j: Index) -> Index:
        return self._lookup[self.base._mul(self.members[i], self.members[j])]

    def _neg(self, i: Index) -> Index:
        return self._lookup[self.base._neg(self.members[i])]

    def embed(self, index: Index) -> Index:
        """Index in the base ring."""
        return self.members[index]

    def restrict(self, base_index: int) -> int:
        index = int(self._lookup[base_index])
        if index < 0:
            raise DomainError(f"{self.base.label(base_index)} does not lie in {self.name}")
        return index

    @property
    def param_names(self) -> Tuple[str, ...]:
        return self.base.param_names

    def params(self, index: int) -> Tuple[int, ...]:
        return self.base.params(int(self.members[index]))

    def element(self, params: Sequence[int]) -> int:
        return self.restrict(self.base.element(params))

    def label(self, index: int) -> str:
        return self.base.label(int(self.members[index]))


class CornerBuilder(RingBuilder):
    kind = RingKind.CORNER
    formula = CornerRing.formula
    ref = '§2, "Then $(eRe)^{qnil} ="'

    def predicted_order(self, descriptor, bases) -> int:
        return bases[0].order

    def realize(self, descriptor, bases) -> FiniteRing:
        base = bases[0]
        return CornerRing(descriptor, base, base.resolve_literal(descriptor.e))
