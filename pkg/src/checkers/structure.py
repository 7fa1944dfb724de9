"""
Structural ring properties decided by exhaustive search.
"""
from typing import Dict, List, Tuple

import numpy as np

from src.core.derived import center, idempotents, qnil_set, units
from src.core.ring import FiniteRing
from src.models.verdict import PredicateVerdict
from .verdicts import Stopwatch, fails, holds


def _image(ring: FiniteRing, values: np.ndarray) -> np.ndarray:
    mask = np.zeros(ring.order, dtype=bool)
    mask[values] = True
    return mask


def is_abelian(ring: FiniteRing) -> PredicateVerdict:
    clock = Stopwatch()
    for e in idempotents(ring).indexes:
        e = int(e)
        differs = ring.mul_row(e) != ring.mul_col(e)
        if differs.any():
            r = int(np.argmax(differs))
            return fails(ring, "abelian", clock, [("e", e), ("r", r)],
                         f"idempotent {ring.label(e)} does not commute with {ring.label(r)}")
    return holds(ring, "abelian", clock)


def is_directly_finite(ring: FiniteRing) -> PredicateVerdict:
    clock = Stopwatch()
    for a in range(ring.order):
        right_inverses = np.flatnonzero(ring.mul_row(a) == ring.one)
        if right_inverses.size == 0:
            continue
        bad = right_inverses[ring.mul_col(a)[right_inverses] != ring.one]
        if bad.size:
            b = int(bad[0])
            return fails(ring, "directly-finite", clock, [("a", a), ("b", b)],
                         f"{ring.label(a)}·{ring.label(b)} = 1 but {ring.label(b)}·{ring.label(a)} != 1")
    return holds(ring, "directly-finite", clock)


def is_local(ring: FiniteRing) -> PredicateVerdict:
    """Non-units closed under addition."""
    clock = Stopwatch()
    unit_mask = units(ring).mask
    non_units = np.flatnonzero(~unit_mask)
    for a in non_units:
        a = int(a)
        sums = np.asarray(ring._add(a, non_units), dtype=np.int64)
        hits = np.flatnonzero(unit_mask[sums])
        if hits.size:
            b = int(non_units[hits[0]])
            return fails(ring, "local", clock, [("a", a), ("b", b), ("sum", int(sums[hits[0]]))],
                         f"non-units {ring.label(a)} and {ring.label(b)} add to the unit {ring.label(int(sums[hits[0]]))}")
    return holds(ring, "local", clock)


def is_exchange(ring: FiniteRing) -> PredicateVerdict:
    """For every x some idempotent e has e ∈ Rx and 1 - e ∈ R(1 - x)."""
    clock = Stopwatch()
    idem = idempotents(ring).mask
    for x in range(ring.order):
        left_ideal = _image(ring, ring.mul_col(x))
        complement_ideal = _image(ring, ring.mul_col(ring.sub(ring.one, x)))
        candidates = np.flatnonzero(idem & left_ideal)
        partners = np.asarray(ring._sub(ring.one, candidates), dtype=np.int64)
        if not complement_ideal[partners].any():
            return fails(ring, "exchange", clock, [("x", x)],
                         f"no idempotent e with e ∈ R·{ring.label(x)} and 1-e ∈ R·(1-{ring.label(x)})")
    return holds(ring, "exchange", clock)


def is_clean(ring: FiniteRing) -> PredicateVerdict:
    clock = Stopwatch()
    unit_mask = units(ring).mask
    idem = idempotents(ring).indexes
    for x in range(ring.order):
        if not unit_mask[np.asarray(ring._sub(x, idem), dtype=np.int64)].any():
            return fails(ring, "clean", clock, [("x", x)],
                         f"{ring.label(x)} is not a unit plus an idempotent")
    return holds(ring, "clean", clock)


def _principal_right_ideals(ring: FiniteRing) -> List[Tuple[int, np.ndarray, np.ndarray]]:
    """Distinct ideals bR as (smallest generator, membership mask, members)."""
    seen: Dict[bytes, int] = {}
    ideals: List[Tuple[int, np.ndarray, np.ndarray]] = []
    for b in range(ring.order):
        mask = _image(ring, ring.mul_row(b))
        key = mask.tobytes()
        if key in seen:
            continue
        seen[key] = b
        ideals.append((b, mask, np.flatnonzero(mask)))
    return ideals


def has_stable_range_one(ring: FiniteRing) -> PredicateVerdict:
    """aR + bR = R implies a + by ∈ U(R) for some y.

    Both conditions depend on b only through bR, so the scan runs over the
    distinct principal right ideals.
    """
    clock = Stopwatch()
    unit_mask = units(ring).mask
    ideals = _principal_right_ideals(ring)
    for a in range(ring.order):
        a_ideal = np.unique(ring.mul_row(a))
        complements = np.asarray(ring._sub(ring.one, a_ideal), dtype=np.int64)
        failing = []
        for b, mask, members in ideals:
            if not mask[complements].any():
                continue
            if not unit_mask[np.asarray(ring._add(a, members), dtype=np.int64)].any():
                failing.append(b)
        if failing:
            b = min(failing)
            return fails(ring, "stable-range-one", clock, [("a", a), ("b", b)],
                         f"{ring.label(a)}R + {ring.label(b)}R = R but no y makes "
                         f"{ring.label(a)} + {ring.label(b)}y a unit")
    return holds(ring, "stable-range-one", clock)


def is_regular(ring: FiniteRing) -> PredicateVerdict:
    clock = Stopwatch()
    for a in range(ring.order):
        sandwiches = ring.mul_col(a)[ring.mul_row(a)]
        if not (sandwiches == a).any():
            return fails(ring, "regular", clock, [("a", a)],
                         f"no b with {ring.label(a)}·b·{ring.label(a)} = {ring.label(a)}")
    return holds(ring, "regular", clock)


def is_strongly_regular(ring: FiniteRing) -> PredicateVerdict:
    clock = Stopwatch()
    for a in range(ring.order):
        square = ring.mul(a, a)
        if not (ring.mul_row(square) == a).any():
            return fails(ring, "strongly-regular", clock, [("a", a)],
                         f"no b with {ring.label(a)}²·b = {ring.label(a)}")
    return holds(ring, "strongly-regular", clock)


def qnil_is_central(ring: FiniteRing) -> PredicateVerdict:
    clock = Stopwatch()
    outside = np.flatnonzero(qnil_set(ring).mask & ~center(ring).mask)
    if outside.size:
        a = int(outside[0])
        r = int(np.argmax(ring.mul_row(a) != ring.mul_col(a)))
        return fails(ring, "qnil-central", clock, [("a", a), ("r", r)],
                     f"quasinilpotent {ring.label(a)} does not commute with {ring.label(r)}")
    return holds(ring, "qnil-central", clock)
