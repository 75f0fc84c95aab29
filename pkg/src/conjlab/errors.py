"""Shared exception types."""


class CapExceeded(ValueError):
    """An operation was refused because its input exceeds the configured
    exhaustion limit.  Raised instead of silently sampling: every answer this
    package returns is exact, so oversized instances are rejected."""


class InvalidFamilyError(ValueError):
    """A set-pair family violates its declared structural invariants
    (sizes, disjointness or intersection cardinality)."""
