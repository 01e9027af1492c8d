"""Shared exception types."""


class CoordinateMismatchError(ValueError):
    """Raised when F- and R-coordinate objects are combined."""


class ConsistencyError(RuntimeError):
    """An internal invariant failed (e.g. a basis matrix that must be
    invertible is singular, or an operator image violated a proven
    rationality constraint).  Maps to CLI exit code 3."""
