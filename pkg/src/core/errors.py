"""
Exception hierarchy shared by ring construction, computation and the CLI.
"""
from typing import Any, Optional


class RingLabError(Exception):
    """Base class for every error raised by this package."""


class DescriptorError(RingLabError, ValueError):
    """A ring descriptor or one of its parameters failed validation."""


class AxiomViolationError(DescriptorError):
    """An explicit table ring breaks one of the ring laws."""

    def __init__(self, message: str, report: Optional[Any] = None):
        super().__init__(message)
        self.report = report


class CapExceededError(RingLabError):
    """The predicted order of a ring is above the configured cap."""

    def __init__(self, message: str, order: int, cap: int):
        super().__init__(message)
        self.order = order
        self.cap = cap


class DomainError(RingLabError, ValueError):
    """An operation was applied outside the set it is defined on."""
