"""
Helpers for assembling PredicateVerdicts.
"""
import time
from typing import Optional, Sequence, Tuple

from src.core.ring import FiniteRing
from src.models.verdict import PredicateVerdict, WitnessElement


class Stopwatch:
    def __init__(self):
        self.start = time.perf_counter()

    @property
    def elapsed_ms(self) -> float:
        return round((time.perf_counter() - self.start) * 1000, 3)


def holds(ring: FiniteRing, predicate: str, clock: Stopwatch,
          consequence: Optional[bool] = None, detail: Optional[str] = None) -> PredicateVerdict:
    return PredicateVerdict(predicate=predicate, ring=ring.name, holds=True,
                            consequence_holds=consequence, detail=detail, elapsed_ms=clock.elapsed_ms)


def fails(ring: FiniteRing, predicate: str, clock: Stopwatch,
          witness: Sequence[Tuple[str, int]], detail: str,
          witness_ring: Optional[FiniteRing] = None) -> PredicateVerdict:
    source = witness_ring or ring
    elements = [WitnessElement(role=role, index=int(index), label=source.label(int(index)))
                for role, index in witness]
    return PredicateVerdict(predicate=predicate, ring=ring.name, holds=False, witness=elements,
                            detail=detail, elapsed_ms=clock.elapsed_ms)
