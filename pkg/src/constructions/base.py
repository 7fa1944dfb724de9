"""
Base builder for ring constructions.
"""
from abc import ABC, abstractmethod
from typing import Dict, List, Sequence

from src.core.ring import FiniteRing
from src.models.descriptor import RingDescriptor, RingKind


class RingBuilder(ABC):
    """Base class for construction builders."""

    kind: RingKind
    formula: str = ""
    ref: str = ""

    def dependencies(self, descriptor: RingDescriptor) -> List[RingDescriptor]:
        """
        Descriptors of the rings this construction is built from.

        Args:
            descriptor: Descriptor being realized

        Returns:
            Base descriptors, realized by the manager before ``realize``
        """
        return [descriptor.base] if descriptor.base is not None else []

    @abstractmethod
    def predicted_order(self, descriptor: RingDescriptor, bases: Sequence[FiniteRing]) -> int:
        """
        Order of the ring before any element is realized.

        Args:
            descriptor: Descriptor being realized
            bases: Realized dependencies, in ``dependencies`` order

        Returns:
            Number of elements of the finished ring
        """
        pass

    @abstractmethod
    def realize(self, descriptor: RingDescriptor, bases: Sequence[FiniteRing]) -> FiniteRing:
        """
        Validate parameters and build the ring.

        Args:
            descriptor: Descriptor being realized
            bases: Realized dependencies, in ``dependencies`` order

        Returns:
            The realized ring
        """
        pass


class BuilderRegistry:
    """Registry mapping construction kinds to builders."""

    def __init__(self):
        self._builders: Dict[RingKind, RingBuilder] = {}

    def register(self, builder: RingBuilder):
        """
        Register a builder for its construction kind.

        Args:
            builder: Builder instance to register
        """
        if not isinstance(builder, RingBuilder):
            raise ValueError("Builder must inherit from RingBuilder")
        self._builders[builder.kind] = builder

    def get(self, kind: RingKind) -> RingBuilder:
        builder = self._builders.get(RingKind(kind))
        if builder is None:
            raise KeyError(f"no builder registered for {kind}")
        return builder

    def list_kinds(self) -> List[str]:
        return [kind.value for kind in self._builders]

    def is_supported(self, kind: str) -> bool:
        try:
            return RingKind(kind) in self._builders
        except ValueError:
            return False


# Global registry instance
builder_registry = BuilderRegistry()
