"""
Theorem cases, their registry and the shared evaluation context.
"""
import threading
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import structlog

from src.checkers import evaluate
from src.config.settings import settings
from src.constructions.manager import construction_manager
from src.core.errors import RingLabError
from src.core.ring import FiniteRing
from src.models.descriptor import RingDescriptor
from src.models.report import CaseKind
from src.models.verdict import PredicateVerdict, WitnessElement
from .catalog import BUILTIN_RINGS, Catalog

logger = structlog.get_logger()

# Sentinel input meaning "every ring of the active catalog".
CATALOG = "*"


class SkipCase(Exception):
    """Raised inside a case to report it as skipped."""

    def __init__(self, reason: str, incomplete: bool = False):
        super().__init__(reason)
        self.reason = reason
        self.incomplete = incomplete


@dataclass
class Finding:
    """What a case check observed: whether its statement held, and why not."""

    holds: bool
    detail: Optional[str] = None
    witness: Optional[List[WitnessElement]] = None
    observations: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_verdict(cls, verdict: PredicateVerdict, **observations: Any) -> "Finding":
        return cls(holds=verdict.holds, detail=verdict.detail, witness=verdict.witness,
                   observations=dict(observations))


def violation(detail: str, ring: Optional[FiniteRing] = None, **roles: int) -> Finding:
    witness = None
    if ring is not None and roles:
        witness = [WitnessElement(role=role, index=int(index), label=ring.label(int(index)))
                   for role, index in roles.items()]
    return Finding(holds=False, detail=detail, witness=witness)


class Checklist:
    """Collects the first failure across several sub-checks of one case."""

    def __init__(self):
        self.failure: Optional[Finding] = None
        self.observations: Dict[str, Any] = {}

    def expect(self, condition: bool, detail: str, ring: Optional[FiniteRing] = None, **roles: int) -> bool:
        if not condition and self.failure is None:
            self.failure = violation(detail, ring, **roles)
        return bool(condition)

    def finding(self) -> Finding:
        observations = dict(self.observations)
        if self.failure is not None:
            self.failure.observations.update(observations)
            return self.failure
        return Finding(holds=True, observations=observations)


class Implication:
    """Tally of "hypothesis implies conclusion" over instances.

    Hypothesis and conclusion are evaluated separately for every instance;
    the statement holds iff no instance has H true and C false.
    """

    def __init__(self):
        self.instances = 0
        self.hypothesis_true: List[str] = []
        self.counterexample: Optional[Finding] = None

    def check(self, instance: str, hypothesis: bool, conclusion: bool, detail: str = "",
              witness: Optional[List[WitnessElement]] = None):
        self.instances += 1
        if hypothesis:
            self.hypothesis_true.append(instance)
        if hypothesis and not conclusion and self.counterexample is None:
            self.counterexample = Finding(
                holds=False,
                detail=f"{instance}: hypothesis holds but conclusion fails" + (f" ({detail})" if detail else ""),
                witness=witness,
            )

    def finding(self) -> Finding:
        observations = {"instances": self.instances, "hypothesis_true": self.hypothesis_true}
        if self.counterexample is not None:
            self.counterexample.observations.update(observations)
            return self.counterexample
        detail = None if self.hypothesis_true else "hypothesis false on every instance"
        return Finding(holds=True, detail=detail, observations=observations)


@dataclass(frozen=True)
class TheoremCase:
    case_id: str
    statement: str
    kind: CaseKind
    inputs: Tuple[str, ...]
    check: Callable[["CaseContext"], Finding]
    expected: bool = True
    skip_reason: Optional[str] = None
    ref: str = ""


class CaseRegistry:
    """Registry of theorem cases keyed by id."""

    def __init__(self):
        self._cases: Dict[str, TheoremCase] = {}

    def register(self, case_id: str, statement: str, kind: CaseKind = CaseKind.ASSERTION,
                 inputs: Sequence[str] = (CATALOG,), expected: bool = True,
                 skip_reason: Optional[str] = None, *, ref: str):
        """
        Decorator registering a case check.

        Args:
            case_id: Stable identifier, topic prefix first
            statement: The result being instantiated, in plain words
            kind: Assertion, implication or recorded observation
            inputs: Catalog slugs the case reads, or CATALOG for all rings
            expected: Whether the checked statement is expected to hold
            skip_reason: Register the case as permanently skipped
            ref: Where the result is stated: section and a verbatim quote anchor,
                or "derived: ..." for checks without a stated source
        """
        def decorator(check: Callable[["CaseContext"], Finding]) -> Callable[["CaseContext"], Finding]:
            if case_id in self._cases:
                raise ValueError(f"duplicate theorem case id {case_id!r}")
            if not ref.strip():
                raise ValueError(f"theorem case {case_id!r} needs a reference")
            self._cases[case_id] = TheoremCase(case_id, statement, kind, tuple(inputs), check,
                                               expected, skip_reason, ref)
            return check
        return decorator

    def get(self, case_id: str) -> TheoremCase:
        return self._cases[case_id]

    def list_cases(self) -> List[TheoremCase]:
        return [self._cases[key] for key in sorted(self._cases)]

    def statements(self) -> Dict[str, str]:
        return {case.case_id: case.statement for case in self.list_cases()}

    def references(self) -> Dict[str, str]:
        return {case.case_id: case.ref for case in self.list_cases()}

    def __len__(self) -> int:
        return len(self._cases)


# Global case registry
case_registry = CaseRegistry()


class CaseContext:
    """Rings and verdicts shared by all cases of one suite run."""

    def __init__(self, catalog: Catalog, order_cap: Optional[int] = None):
        self.catalog = catalog
        self.order_cap = settings.order_cap if order_cap is None else order_cap
        self._rings: Dict[str, FiniteRing] = {}
        self.failures: Dict[str, str] = {}
        self._lock = threading.Lock()

    def prepare(self):
        """Build every catalog ring in catalog order, recording failures."""
        for item in self.catalog:
            try:
                self._rings[item.slug] = construction_manager.build(item.descriptor(), order_cap=self.order_cap)
            except RingLabError as e:
                self.failures[item.slug] = str(e)
                logger.error("Catalog ring failed to build", slug=item.slug, error=str(e))

    def ring(self, slug: str) -> FiniteRing:
        """Catalog ring by slug, falling back to the built-in definition."""
        if slug in self.failures:
            raise SkipCase(f"{slug}: {self.failures[slug]}", incomplete=True)
        ring = self._rings.get(slug)
        if ring is not None:
            return ring
        descriptor = BUILTIN_RINGS.get(slug)
        if descriptor is None:
            raise SkipCase(f"ring {slug!r} is neither in the catalog nor built in")
        try:
            ring = construction_manager.build(descriptor, order_cap=self.order_cap)
        except RingLabError as e:
            with self._lock:
                self.failures[slug] = str(e)
            raise SkipCase(f"{slug}: {e}", incomplete=True) from e
        with self._lock:
            return self._rings.setdefault(slug, ring)

    def catalog_rings(self) -> List[Tuple[str, FiniteRing]]:
        return [(item.slug, self._rings[item.slug]) for item in self.catalog if item.slug in self._rings]

    def build(self, descriptor: RingDescriptor) -> FiniteRing:
        try:
            return construction_manager.build(descriptor, order_cap=self.order_cap)
        except RingLabError as e:
            raise SkipCase(f"{descriptor.display_name()}: {e}", incomplete=True) from e

    def verdict(self, ring: FiniteRing, predicate: str) -> PredicateVerdict:
        return evaluate(ring, predicate)

    def holds(self, ring: FiniteRing, predicate: str) -> bool:
        return self.verdict(ring, predicate).holds
