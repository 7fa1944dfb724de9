"""
Verdict and report models returned by checkers and ring-core scans.
"""
from typing import List, Literal, Optional

from pydantic import BaseModel, Field, model_validator


class WitnessElement(BaseModel):
    role: str
    index: int
    label: str


class PredicateVerdict(BaseModel):
    predicate: str
    ring: str
    holds: bool
    witness: Optional[List[WitnessElement]] = None
    detail: Optional[str] = None
    consequence_holds: Optional[bool] = None
    elapsed_ms: float = Field(default=0.0, ge=0.0)

    @model_validator(mode="after")
    def witness_iff_failure(self):
        if self.holds and self.witness:
            raise ValueError("a holding verdict carries no witness")
        if not self.holds and not self.witness:
            raise ValueError("a failing verdict needs a witness")
        return self

    def witness_index(self, role: str) -> int:
        for element in self.witness or []:
            if element.role == role:
                return element.index
        raise KeyError(role)


class AxiomReport(BaseModel):
    ring: str
    order: int
    status: Literal["ok", "violation", "unchecked"]
    law: Optional[str] = None
    triple: Optional[List[int]] = None
    detail: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.status == "ok"
