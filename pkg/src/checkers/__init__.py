from typing import Callable, Dict

from src.core.ring import FiniteRing
from src.models.verdict import PredicateVerdict
from .kernel import k0_kernel_condition
from .normality import (
    Side,
    is_left_duo,
    is_left_nilpotent_duo,
    is_left_normal_on_jacobson,
    is_left_qnil_duo,
    is_left_unit_duo,
    is_qnil_duo,
    is_right_duo,
    is_right_nilpotent_duo,
    is_right_normal_on_jacobson,
    is_right_qnil_duo,
    is_right_unit_duo,
    one_sided_normality,
)
from .structure import (
    has_stable_range_one,
    is_abelian,
    is_clean,
    is_directly_finite,
    is_exchange,
    is_local,
    is_regular,
    is_strongly_regular,
    qnil_is_central,
)
from .witness import recheck_witness

PROPERTY_CHECKERS: Dict[str, Callable[[FiniteRing], PredicateVerdict]] = {
    "right-duo": is_right_duo,
    "left-duo": is_left_duo,
    "right-qnil-duo": is_right_qnil_duo,
    "left-qnil-duo": is_left_qnil_duo,
    "qnil-duo": is_qnil_duo,
    "right-unit-duo": is_right_unit_duo,
    "left-unit-duo": is_left_unit_duo,
    "right-nilpotent-duo": is_right_nilpotent_duo,
    "left-nilpotent-duo": is_left_nilpotent_duo,
    "right-normal-on-jacobson": is_right_normal_on_jacobson,
    "left-normal-on-jacobson": is_left_normal_on_jacobson,
    "abelian": is_abelian,
    "directly-finite": is_directly_finite,
    "local": is_local,
    "exchange": is_exchange,
    "clean": is_clean,
    "stable-range-one": has_stable_range_one,
    "regular": is_regular,
    "strongly-regular": is_strongly_regular,
    "qnil-central": qnil_is_central,
}


def evaluate(ring: FiniteRing, predicate: str) -> PredicateVerdict:
    """Run a named checker once per ring; later calls reuse the verdict."""
    try:
        checker = PROPERTY_CHECKERS[predicate]
    except KeyError:
        raise KeyError(f"unknown predicate {predicate!r}") from None
    return ring.memo(f"verdict:{predicate}", lambda: checker(ring))


__all__ = [
    "PROPERTY_CHECKERS",
    "evaluate",
    "Side",
    "one_sided_normality",
    "is_right_duo",
    "is_left_duo",
    "is_right_qnil_duo",
    "is_left_qnil_duo",
    "is_qnil_duo",
    "is_right_unit_duo",
    "is_left_unit_duo",
    "is_right_nilpotent_duo",
    "is_left_nilpotent_duo",
    "is_right_normal_on_jacobson",
    "is_left_normal_on_jacobson",
    "is_abelian",
    "is_directly_finite",
    "is_local",
    "is_exchange",
    "is_clean",
    "has_stable_range_one",
    "is_regular",
    "is_strongly_regular",
    "qnil_is_central",
    "k0_kernel_condition",
    "recheck_witness",
]
