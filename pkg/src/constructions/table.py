"""
Rings given by explicit addition and multiplication tables.
"""
import numpy as np
import structlog

from src.constructions.base import RingBuilder
from src.core.axioms import verify_axioms
from src.core.errors import AxiomViolationError, DescriptorError
from src.core.ring import FiniteRing, Index
from src.models.descriptor import RingDescriptor, RingKind

logger = structlog.get_logger()


def _identity(table: np.ndarray, elements: np.ndarray) -> int:
    for candidate in range(table.shape[0]):
        if np.array_equal(table[candidate], elements) and np.array_equal(table[:, candidate], elements):
            return candidate
    return -1


class TableRing(FiniteRing):
    formula = "explicit addition and multiplication tables"

    def __init__(self, descriptor: RingDescriptor):
        try:
            add = np.asarray(descriptor.add_table, dtype=np.int64)
            mul = np.asarray(descriptor.mul_table, dtype=np.int64)
        except ValueError as e:
            raise DescriptorError(f"operation tables must be rectangular integer tables: {e}") from e
        order = add.shape[0] if add.ndim == 2 else 0
        for label, table in (("addition", add), ("multiplication", mul)):
            if table.ndim != 2 or table.shape != (order, order) or order < 2:
                raise DescriptorError(f"{label} table must be a square table of order >= 2, got shape {table.shape}")
            if table.min() < 0 or table.max() >= order:
                raise AxiomViolationError(f"{label} table leaves 0..{order - 1} (closure)")
        super().__init__(descriptor, (order,), ("r",))
        add.setflags(write=False)
        mul.setflags(write=False)
        self._add_t = add
        self._mul_t = mul
        zero = _identity(add, self.elements)
        if zero < 0:
            raise AxiomViolationError("addition table has no identity element")
        one = _identity(mul, self.elements)
        if one < 0:
            raise AxiomViolationError("multiplication table has no identity element")
        self.zero = zero
        self.one = one
        negatives = np.full(order, -1, dtype=np.int64)
        for i in range(order):
            hits = np.flatnonzero(add[i] == zero)
            if hits.size:
                negatives[i] = hits[0]
        if (negatives < 0).any():
            bad = int(np.flatnonzero(negatives < 0)[0])
            raise AxiomViolationError(f"element {bad} has no additive inverse")
        negatives.setflags(write=False)
        self._neg_t = negatives

    def _add(self, i: Index, j: Index) -> Index:
        return self._add_t[i, j]

    def _mul(self, i: Index, j: Index) -> Index:
        return self._mul_t[i, j]

    def _neg(self, i: Index) -> Index:
        return self._neg_t[i]

    def label(self, index: int) -> str:
        return str(int(index))


def table_descriptor(ring: FiniteRing, name: str = None) -> RingDescriptor:
    """Export any realized ring as an explicit table descriptor."""
    return RingDescriptor(
        kind=RingKind.TABLE,
        name=name or f"Table[{ring.name}]",
        add_table=ring._build_table(ring._add).tolist(),
        mul_table=ring._build_table(ring._mul).tolist(),
    )


class TableBuilder(RingBuilder):
    kind = RingKind.TABLE
    formula = TableRing.formula
    ref = "derived: tables supplied with the descriptor"

    def predicted_order(self, descriptor, bases) -> int:
        return len(descriptor.add_table or [])

    def realize(self, descriptor, bases) -> FiniteRing:
        ring = TableRing(descriptor)
        report = verify_axioms(ring, force=True)
        if not report.ok:
            raise AxiomViolationError(
                f"table ring violates {report.law} at {report.triple}: {report.detail}", report
            )
        return ring
