"""
Serializable ring recipes.
"""
import hashlib
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple, Union

import orjson as json
from pydantic import BaseModel, Field, model_validator

DESCRIPTOR_SCHEMA = "ringlab.descriptor/1"

ElementLiteral = Union[int, List[int]]


class RingKind(str, Enum):
    ZN = "Zn"
    PRODUCT = "Product"
    MN = "Mn"
    UN = "Un"
    DN = "Dn"
    VN = "Vn"
    LST = "Lst"
    HST = "Hst"
    KS = "Ks"
    DORROH = "Dorroh"
    HURWITZ_TRUNC = "HurwitzTrunc"
    SKEW_POWER_TRUNC = "SkewPowerTrunc"
    T_TRUNC = "TTrunc"
    CORNER = "Corner"
    LOCAL16 = "Local16"
    D3_PATTERN = "D3Pattern"
    TABLE = "Table"


MATRIX_FAMILIES = (RingKind.MN, RingKind.UN, RingKind.DN, RingKind.VN)

_REQUIRED: Dict[RingKind, Tuple[str, ...]] = {
    RingKind.ZN: ("n",),
    RingKind.PRODUCT: ("factors",),
    RingKind.MN: ("base", "n"),
    RingKind.UN: ("base", "n"),
    RingKind.DN: ("base", "n"),
    RingKind.VN: ("base", "n"),
    RingKind.LST: ("base", "s", "t"),
    RingKind.HST: ("base", "s", "t"),
    RingKind.KS: ("base", "s"),
    RingKind.DORROH: ("base", "n"),
    RingKind.HURWITZ_TRUNC: ("base", "degree"),
    RingKind.SKEW_POWER_TRUNC: ("base", "degree"),
    RingKind.T_TRUNC: ("base", "sub", "n"),
    RingKind.CORNER: ("base", "e"),
    RingKind.LOCAL16: (),
    RingKind.D3_PATTERN: ("base",),
    RingKind.TABLE: ("add_table", "mul_table"),
}


def render_literal(value: Optional[ElementLiteral]) -> str:
    if value is None:
        return "?"
    if isinstance(value, int):
        return str(value)
    return "[" + ",".join(str(v) for v in value) + "]"


class RingDescriptor(BaseModel):
    """Recipe naming a construction and its parameters.

    Element literals (``s``, ``t``, ``e``) are given in the base ring's
    native coordinates: a residue for Z_n, a flat row-major entry list for
    matrix rings, a coefficient list for truncated series.
    """

    kind: RingKind
    name: Optional[str] = None
    n: Optional[int] = Field(default=None, ge=1)
    base: Optional["RingDescriptor"] = None
    factors: Optional[List["RingDescriptor"]] = None
    sub: Optional["RingDescriptor"] = None
    s: Optional[ElementLiteral] = None
    t: Optional[ElementLiteral] = None
    e: Optional[ElementLiteral] = None
    degree: Optional[int] = Field(default=None, ge=0)
    alpha: Optional[List[int]] = None
    add_table: Optional[List[List[int]]] = None
    mul_table: Optional[List[List[int]]] = None

    @model_validator(mode="after")
    def check_parameters(self):
        missing = [field for field in _REQUIRED[self.kind] if getattr(self, field) is None]
        if missing:
            raise ValueError(f"{self.kind.value} descriptor requires {', '.join(missing)}")
        if self.kind == RingKind.PRODUCT and not self.factors:
            raise ValueError("Product descriptor requires at least one factor")
        return self

    def to_dict(self) -> Dict[str, Any]:
        return self.model_dump(mode="json", exclude_none=True)

    def dumps(self) -> bytes:
        return json.dumps(self.to_dict(), option=json.OPT_SORT_KEYS)

    def digest(self) -> str:
        return hashlib.sha256(self.dumps()).hexdigest()

    def display_name(self) -> str:
        if self.name:
            return self.name
        kind = self.kind
        base = self.base.display_name() if self.base is not None else "?"
        if kind == RingKind.ZN:
            return f"Z_{self.n}"
        if kind == RingKind.PRODUCT:
            return "×".join(factor.display_name() for factor in self.factors or [])
        if kind in MATRIX_FAMILIES:
            return f"{kind.value[0]}_{self.n}({base})"
        if kind in (RingKind.LST, RingKind.HST):
            return f"{kind.value[0]}_({render_literal(self.s)},{render_literal(self.t)})({base})"
        if kind == RingKind.KS:
            return f"K_{render_literal(self.s)}({base})"
        if kind == RingKind.DORROH:
            return f"I({base}, Z_{self.n})"
        if kind in (RingKind.HURWITZ_TRUNC, RingKind.SKEW_POWER_TRUNC):
            alpha = "id" if self.alpha is None else "α"
            return f"{kind.value}({base}, {alpha}, {self.degree})"
        if kind == RingKind.T_TRUNC:
            sub = self.sub.display_name() if self.sub is not None else "?"
            return f"T_{self.n}[{base}, {sub}]"
        if kind == RingKind.CORNER:
            return f"e{base}e (e={render_literal(self.e)})"
        if kind == RingKind.LOCAL16:
            return "Local16"
        if kind == RingKind.D3_PATTERN:
            return f"D3Pattern({base})"
        return f"Table({len(self.add_table or [])})"


RingDescriptor.model_rebuild()
