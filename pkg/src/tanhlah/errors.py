class DomainError(ValueError):
    """An argument lies outside the domain where the operation is defined."""


class IntegrityError(ArithmeticError):
    """An exact computation produced a result that contradicts a known invariant."""


class UsageError(ValueError):
    """Unknown identifier or malformed request."""
