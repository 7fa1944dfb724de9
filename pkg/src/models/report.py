"""
Report models emitted by the theorem suite and the CLI.
"""
from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from .verdict import AxiomReport, PredicateVerdict, WitnessElement

SUITE_SCHEMA = "ringlab.suite-report/1"
SET_SCHEMA = "ringlab.set-report/1"
VERDICT_SCHEMA = "ringlab.verdict-report/1"


class CaseKind(str, Enum):
    ASSERTION = "assertion"
    IMPLICATION = "implication"
    OBSERVATION = "recorded-observation"


class Outcome(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"
    RECORDED = "recorded"


class CaseResult(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    case_id: str
    ref: str = Field(default="", alias="paper_ref")
    statement: str
    kind: CaseKind
    outcome: Outcome
    inputs: List[str] = Field(default_factory=list)
    witness: Optional[List[WitnessElement]] = None
    detail: Optional[str] = None
    observations: Dict[str, Any] = Field(default_factory=dict)
    millis: float = 0.0


class CatalogEntry(BaseModel):
    slug: str
    name: str
    digest: str


class SuiteSummary(BaseModel):
    total: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    recorded: int = 0


class SuiteReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: str = Field(default=SUITE_SCHEMA, alias="schema")
    engine_version: str
    catalog_digest: str
    catalog: List[CatalogEntry]
    complete: bool
    cases: List[CaseResult]
    summary: SuiteSummary

    @property
    def ok(self) -> bool:
        """All assertion and implication cases passed and nothing was skipped for a build failure."""
        return self.complete and self.summary.failed == 0

    def stable_dict(self) -> Dict[str, Any]:
        """Serialized form with every timing field zeroed."""
        data = self.model_dump(mode="json", by_alias=True)
        for case in data["cases"]:
            case["millis"] = 0.0
        return data


class ElementSetReport(BaseModel):
    name: str
    cardinality: int
    elements: List[str]
    indexes: List[int]


class SetReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: str = Field(default=SET_SCHEMA, alias="schema")
    ring: str
    order: int
    sets: List[ElementSetReport]


class VerdictReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: str = Field(default=VERDICT_SCHEMA, alias="schema")
    ring: str
    order: int
    axioms: Optional[AxiomReport] = None
    verdicts: List[PredicateVerdict]


EXPLAIN_SCHEMA = "ringlab.explain-report/1"


class CoordinateInfo(BaseModel):
    name: str
    radix: int


class ExplainReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: str = Field(default=EXPLAIN_SCHEMA, alias="schema")
    ring: str
    kind: str
    order: int
    formula: str
    ref: str = Field(default="", alias="paper_ref")
    coordinates: List[CoordinateInfo]
    zero: str
    one: str
    notes: List[str] = Field(default_factory=list)
