"""Exception types shared across the package."""


class MonresError(Exception):
    """Base class for all errors raised by monres."""


class DimensionMismatch(MonresError, ValueError):
    pass


class ZeroIdealError(MonresError, ValueError):
    pass


class NotArtinianError(MonresError, ValueError):
    pass


class ComplexTooLarge(MonresError, ValueError):
    """Raised when the Taylor complex would exceed the generator cap."""


class NotAResolution(MonresError, ValueError):
    pass


class UnsupportedDimension(MonresError, ValueError):
    pass


class IterationCapExceeded(MonresError, RuntimeError):
    pass


class NotIntegrallyClosed(MonresError, ValueError):
    """Raised by reports that only make sense for integrally closed ideals."""


class InvariantViolation(MonresError, AssertionError):
    """An internal consistency check failed; always a bug."""
