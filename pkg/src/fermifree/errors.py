"""Exception types raised on contract violations."""


class ValidationError(ValueError):
    """An input violates a documented invariant (non-unit trace, bad norm, ...)."""


class CapacityError(ValidationError):
    """The requested orbital count exceeds the configured ceiling."""
