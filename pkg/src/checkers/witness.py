"""
Re-verification of negative verdicts against the raw definitions.
"""
from typing import Callable, Dict

import numpy as np

from src.core.derived import idempotents, jacobson_radical, nilpotents, qnil_set, units
from src.core.ring import FiniteRing
from src.models.verdict import PredicateVerdict

_SUBSETS: Dict[str, Callable[[FiniteRing], np.ndarray]] = {
    "duo": lambda ring: ring.elements,
    "qnil-duo": lambda ring: qnil_set(ring).indexes,
    "unit-duo": lambda ring: units(ring).indexes,
    "nilpotent-duo": lambda ring: nilpotents(ring).indexes,
    "normal-on-jacobson": lambda ring: jacobson_radical(ring).indexes,
}


def _normality(ring: FiniteRing, verdict: PredicateVerdict, right: bool, family: str) -> bool:
    subset = [int(s) for s in _SUBSETS[family](ring)]
    a, b = verdict.witness_index("a"), verdict.witness_index("b")
    if b not in subset:
        return False
    target = ring.mul(b, a) if right else ring.mul(a, b)
    if right:
        return all(ring.mul(a, c) != target for c in subset)
    return all(ring.mul(c, a) != target for c in subset)


def _abelian(ring, verdict) -> bool:
    e, r = verdict.witness_index("e"), verdict.witness_index("r")
    return ring.mul(e, e) == e and ring.mul(e, r) != ring.mul(r, e)


def _directly_finite(ring, verdict) -> bool:
    a, b = verdict.witness_index("a"), verdict.witness_index("b")
    return ring.mul(a, b) == ring.one and ring.mul(b, a) != ring.one


def _local(ring, verdict) -> bool:
    a, b = verdict.witness_index("a"), verdict.witness_index("b")
    unit = units(ring)
    return a not in unit and b not in unit and ring.add(a, b) in unit


def _exchange(ring, verdict) -> bool:
    x = verdict.witness_index("x")
    complement = ring.sub(ring.one, x)
    rx = {ring.mul(r, x) for r in range(ring.order)}
    r1x = {ring.mul(r, complement) for r in range(ring.order)}
    for e in range(ring.order):
        if ring.mul(e, e) == e and e in rx and ring.sub(ring.one, e) in r1x:
            return False
    return True


def _clean(ring, verdict) -> bool:
    x = verdict.witness_index("x")
    unit = units(ring)
    return all(ring.sub(x, e) not in unit for e in idempotents(ring))


def _stable_range(ring, verdict) -> bool:
    a, b = verdict.witness_index("a"), verdict.witness_index("b")
    a_row = np.asarray(ring.mul_row(a))
    b_row = np.asarray(ring.mul_row(b))
    sums = np.asarray(ring._add(a_row[:, None], b_row[None, :]))
    if not (sums == ring.one).any():
        return False
    unit = units(ring)
    return all(ring.add(a, int(by)) not in unit for by in b_row)


def _regular(ring, verdict) -> bool:
    a = verdict.witness_index("a")
    return all(ring.mul(ring.mul(a, b), a) != a for b in range(ring.order))


def _strongly_regular(ring, verdict) -> bool:
    a = verdict.witness_index("a")
    square = ring.mul(a, a)
    return all(ring.mul(square, b) != a for b in range(ring.order))


def _qnil_central(ring, verdict) -> bool:
    a, r = verdict.witness_index("a"), verdict.witness_index("r")
    return a in qnil_set(ring) and ring.mul(a, r) != ring.mul(r, a)


_CHECKS: Dict[str, Callable[[FiniteRing, PredicateVerdict], bool]] = {
    "abelian": _abelian,
    "directly-finite": _directly_finite,
    "local": _local,
    "exchange": _exchange,
    "clean": _clean,
    "stable-range-one": _stable_range,
    "regular": _regular,
    "strongly-regular": _strongly_regular,
    "qnil-central": _qnil_central,
}


def recheck_witness(ring: FiniteRing, verdict: PredicateVerdict) -> bool:
    """True when the witness of a failing verdict reproduces the violation."""
    if verdict.holds:
        return False
    name = verdict.predicate
    if name == "qnil-duo":
        return _normality(ring, verdict, True, "qnil-duo") or _normality(ring, verdict, False, "qnil-duo")
    for side in ("right", "left"):
        prefix = f"{side}-"
        if name.startswith(prefix) and name[len(prefix):] in _SUBSETS:
            return _normality(ring, verdict, side == "right", name[len(prefix):])
    check = _CHECKS.get(name)
    if check is None:
        raise KeyError(f"no witness check for predicate {name!r}")
    return check(ring, verdict)
