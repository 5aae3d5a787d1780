"""Exception types shared across the package."""


class AscpartError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(AscpartError, ValueError):
    """An argument violates a function's mathematical precondition."""


class CapacityError(AscpartError, ValueError):
    """An argument exceeds a configured or built-in size guard."""
