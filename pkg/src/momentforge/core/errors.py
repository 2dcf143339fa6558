from __future__ import annotations


class MomentForgeError(Exception):
    """Base class for all errors raised by the package."""


class InputError(MomentForgeError, ValueError):
    """Malformed or out-of-range input (files, normals, presets, bounds)."""


class UnboundedPolytopeError(InputError):
    def __init__(self) -> None:
        super().__init__("unbounded")


class RedundantFacetError(InputError):
    def __init__(self, index: int) -> None:
        super().__init__(f"redundant facet {index}")
        self.index = index


class GuardExceededError(InputError):
    """A search bound is larger than the configured guard allows."""


class DomainError(MomentForgeError, ValueError):
    """An evaluation was requested outside the operation's domain."""


class DegenerateCellError(DomainError):
    pass


class IntegrabilityError(DomainError):
    pass


class ConsistencyError(MomentForgeError):
    """Two independent computations of the same exact quantity disagree."""
