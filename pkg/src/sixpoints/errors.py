"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Caller-supplied data violates a documented precondition."""


class ConsistencyError(RuntimeError):
    """An internal self-check failed; indicates a bug, not bad input."""
