"""
Derived sets computed by exhaustive search.

Whole-ring sets are memoized on the ring; comm(a) and comm²(a) are recomputed per call.
"""
import time

import numpy as np
import structlog

from src.core.element_set import ElementSet
from src.core.errors import DomainError
from src.core.ring import FiniteRing

logger = structlog.get_logger()


def _check_element(ring: FiniteRing, a: int) -> int:
    a = int(a)
    if not 0 <= a < ring.order:
        raise DomainError(f"element {a} outside 0..{ring.order - 1} of {ring.name}")
    return a


def _inverse_table(ring: FiniteRing) -> np.ndarray:
    def compute() -> np.ndarray:
        start = time.perf_counter()
        inverses = np.full(ring.order, -1, dtype=np.int64)
        for u in range(ring.order):
            candidates = np.flatnonzero(ring.mul_row(u) == ring.one)
            if candidates.size == 0:
                continue
            two_sided = candidates[ring.mul_col(u)[candidates] == ring.one]
            if two_sided.size:
                inverses[u] = two_sided[0]
        inverses.setflags(write=False)
        logger.debug("Computed units", ring=ring.name, count=int((inverses >= 0).sum()),
                     elapsed_ms=round((time.perf_counter() - start) * 1000, 3))
        return inverses
    return ring.memo("inverse_table", compute)


def units(ring: FiniteRing) -> ElementSet:
    return ring.memo("units", lambda: ElementSet(ring, _inverse_table(ring) >= 0))


def inverse(ring: FiniteRing, u: int) -> int:
    u = _check_element(ring, u)
    v = int(_inverse_table(ring)[u])
    if v < 0:
        raise DomainError(f"{ring.label(u)} is not a unit of {ring.name}")
    return v


def commutant(ring: FiniteRing, a: int) -> ElementSet:
    a = _check_element(ring, a)
    return ElementSet(ring, ring.mul_row(a) == ring.mul_col(a))


def double_commutant(ring: FiniteRing, a: int) -> ElementSet:
    a = _check_element(ring, a)
    mask = np.ones(ring.order, dtype=bool)
    for c in commutant(ring, a).indexes:
        mask &= ring.mul_row(int(c)) == ring.mul_col(int(c))
    return ElementSet(ring, mask)


def qnil_set(ring: FiniteRing) -> ElementSet:
    """Elements ``a`` with ``1 + ax`` a unit for every ``x`` commuting with ``a``."""
    def compute() -> ElementSet:
        start = time.perf_counter()
        unit_mask = units(ring).mask
        mask = np.zeros(ring.order, dtype=bool)
        for a in range(ring.order):
            row = ring.mul_row(a)
            products = row[row == ring.mul_col(a)]
            shifted = np.asarray(ring._add(ring.one, products), dtype=np.int64)
            mask[a] = bool(unit_mask[shifted].all())
        logger.debug("Computed quasinilpotents", ring=ring.name, count=int(mask.sum()),
                     elapsed_ms=round((time.perf_counter() - start) * 1000, 3))
        return ElementSet(ring, mask)
    return ring.memo("qnil", compute)


def jacobson_radical(ring: FiniteRing) -> ElementSet:
    def compute() -> ElementSet:
        unit_mask = units(ring).mask
        mask = np.zeros(ring.order, dtype=bool)
        for a in range(ring.order):
            shifted = np.asarray(ring._add(ring.one, ring.mul_row(a)), dtype=np.int64)
            mask[a] = bool(unit_mask[shifted].all())
        return ElementSet(ring, mask)
    return ring.memo("jacobson", compute)


def nilpotents(ring: FiniteRing) -> ElementSet:
    def compute() -> ElementSet:
        # a^(2^m) with 2^m >= order vanishes iff a is nilpotent
        powers = ring.elements
        span = 1
        while span < ring.order:
            powers = np.asarray(ring._mul(powers, powers), dtype=np.int64)
            span *= 2
        return ElementSet(ring, powers == ring.zero)
    return ring.memo("nilpotents", compute)


def idempotents(ring: FiniteRing) -> ElementSet:
    def compute() -> ElementSet:
        squares = np.asarray(ring._mul(ring.elements, ring.elements), dtype=np.int64)
        return ElementSet(ring, squares == ring.elements)
    return ring.memo("idempotents", compute)


def center(ring: FiniteRing) -> ElementSet:
    def compute() -> ElementSet:
        if ring.has_table:
            table = ring.mul_table()
            return ElementSet(ring, (table == table.T).all(axis=1))
        mask = np.array([bool((ring.mul_row(c) == ring.mul_col(c)).all()) for c in range(ring.order)])
        return ElementSet(ring, mask)
    return ring.memo("center", compute)


DERIVED_SETS = {
    "units": units,
    "qnil": qnil_set,
    "jacobson": jacobson_radical,
    "nilpotents": nilpotents,
    "idempotents": idempotents,
    "center": center,
}
