from .errors import AxiomViolationError, CapExceededError, DescriptorError, DomainError, RingLabError
from .encoding import MixedRadix
from .element_set import ElementSet
from .ring import FiniteRing
from .derived import (
    DERIVED_SETS,
    center,
    commutant,
    double_commutant,
    idempotents,
    inverse,
    jacobson_radical,
    nilpotents,
    qnil_set,
    units,
)
from .axioms import verify_axioms

__all__ = [
    "AxiomViolationError",
    "CapExceededError",
    "DescriptorError",
    "DomainError",
    "RingLabError",
    "MixedRadix",
    "ElementSet",
    "FiniteRing",
    "DERIVED_SETS",
    "center",
    "commutant",
    "double_commutant",
    "idempotents",
    "inverse",
    "jacobson_radical",
    "nilpotents",
    "qnil_set",
    "units",
    "verify_axioms",
]
