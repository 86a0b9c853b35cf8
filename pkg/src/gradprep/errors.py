"""Shared exception and warning types."""


class ZeroVector(ValueError):
    """Input vector has no nonzero component."""


class NoOverlap(ValueError):
    """Initial state has zero overlap with the marked subspace."""


class OutOfRange(ValueError):
    """Argument outside the domain a formula is valid for."""


class BoundInvalid(UserWarning):
    """Runtime-bound precondition violated; the bound value is unreliable."""
