"""
One-sided normality of element subsets and the duo family built on it.
"""
from enum import Enum

import numpy as np
import structlog

from src.core.derived import jacobson_radical, nilpotents, qnil_set, units
from src.core.element_set import ElementSet
from src.core.ring import FiniteRing
from src.models.verdict import PredicateVerdict
from .verdicts import Stopwatch, fails, holds

logger = structlog.get_logger()


class Side(str, Enum):
    RIGHT = "right"
    LEFT = "left"


def one_sided_normality(ring: FiniteRing, subset: ElementSet, side: Side,
                        predicate: str = "normality") -> PredicateVerdict:
    """Right: S·a ⊆ a·S for every a. Left: a·S ⊆ S·a.

    Scans a in ascending order and reports the first b ∈ S without a partner c.
    """
    side = Side(side)
    clock = Stopwatch()
    members = subset.indexes
    if members.size == 0 or (members.size == 1 and int(members[0]) == ring.zero):
        return holds(ring, predicate, clock, detail="trivial subset")

    for a in range(ring.order):
        row = ring.mul_row(a)[members]   # a·s
        col = ring.mul_col(a)[members]   # s·a
        image, targets = (row, col) if side == Side.RIGHT else (col, row)
        mask = np.zeros(ring.order, dtype=bool)
        mask[image] = True
        ok = mask[targets]
        if ok.all():
            continue
        position = int(np.argmin(ok))
        b = int(members[position])
        product = int(targets[position])
        la, lb, lp = ring.label(a), ring.label(b), ring.label(product)
        if side == Side.RIGHT:
            detail = f"{lb}·{la} = {lp} but no c in the subset has {la}·c = {lp}"
        else:
            detail = f"{la}·{lb} = {lp} but no c in the subset has c·{la} = {lp}"
        logger.debug("Normality fails", ring=ring.name, predicate=predicate, a=a, b=b)
        return fails(ring, predicate, clock, [("a", a), ("b", b), ("product", product)], detail)
    return holds(ring, predicate, clock)


def is_right_duo(ring: FiniteRing) -> PredicateVerdict:
    return one_sided_normality(ring, ElementSet.full(ring), Side.RIGHT, "right-duo")


def is_left_duo(ring: FiniteRing) -> PredicateVerdict:
    return one_sided_normality(ring, ElementSet.full(ring), Side.LEFT, "left-duo")


def is_right_qnil_duo(ring: FiniteRing) -> PredicateVerdict:
    return ring.memo("verdict:right-qnil-duo", lambda: one_sided_normality(
        ring, qnil_set(ring), Side.RIGHT, "right-qnil-duo"))


def is_left_qnil_duo(ring: FiniteRing) -> PredicateVerdict:
    return ring.memo("verdict:left-qnil-duo", lambda: one_sided_normality(
        ring, qnil_set(ring), Side.LEFT, "left-qnil-duo"))


def is_qnil_duo(ring: FiniteRing) -> PredicateVerdict:
    right = is_right_qnil_duo(ring)
    if not right.holds:
        return right.model_copy(update={"predicate": "qnil-duo"})
    left = is_left_qnil_duo(ring)
    return left.model_copy(update={"predicate": "qnil-duo",
                                   "elapsed_ms": right.elapsed_ms + left.elapsed_ms})


def is_right_unit_duo(ring: FiniteRing) -> PredicateVerdict:
    return one_sided_normality(ring, units(ring), Side.RIGHT, "right-unit-duo")


def is_left_unit_duo(ring: FiniteRing) -> PredicateVerdict:
    return one_sided_normality(ring, units(ring), Side.LEFT, "left-unit-duo")


def is_right_nilpotent_duo(ring: FiniteRing) -> PredicateVerdict:
    return one_sided_normality(ring, nilpotents(ring), Side.RIGHT, "right-nilpotent-duo")


def is_left_nilpotent_duo(ring: FiniteRing) -> PredicateVerdict:
    return one_sided_normality(ring, nilpotents(ring), Side.LEFT, "left-nilpotent-duo")


def is_right_normal_on_jacobson(ring: FiniteRing) -> PredicateVerdict:
    return one_sided_normality(ring, jacobson_radical(ring), Side.RIGHT, "right-normal-on-jacobson")


def is_left_normal_on_jacobson(ring: FiniteRing) -> PredicateVerdict:
    return one_sided_normality(ring, jacobson_radical(ring), Side.LEFT, "left-normal-on-jacobson")
