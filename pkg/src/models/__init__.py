from .descriptor import RingDescriptor, RingKind, ElementLiteral
from .verdict import AxiomReport, PredicateVerdict, WitnessElement
from .report import (
    CaseKind,
    CaseResult,
    CatalogEntry,
    CoordinateInfo,
    ElementSetReport,
    ExplainReport,
    Outcome,
    SetReport,
    SuiteReport,
    SuiteSummary,
    VerdictReport,
)

__all__ = [
    "RingDescriptor",
    "RingKind",
    "ElementLiteral",
    "AxiomReport",
    "PredicateVerdict",
    "WitnessElement",
    "CaseKind",
    "CaseResult",
    "CatalogEntry",
    "CoordinateInfo",
    "ElementSetReport",
    "ExplainReport",
    "Outcome",
    "SetReport",
    "SuiteReport",
    "SuiteSummary",
    "VerdictReport",
]
