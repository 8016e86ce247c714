"""Exception types shared across the package."""


class BcinvError(Exception):
    """Base class for all package errors."""


class ParseError(BcinvError, ValueError):
    """Malformed polynomial text, field file or CLI argument."""


class NotPMaximal(BcinvError):
    """Z[theta] is not maximal at p; splitting at p is out of supported scope."""

    def __init__(self, p, message=None):
        self.p = p
        super().__init__(message or f"order is not maximal at p={p}")


class UnsupportedField(BcinvError):
    """The requested computation is not supported for this field."""


class SaturationFailure(BcinvError):
    """Ideal enumeration bound too small: class count still growing."""


class PipelineMismatch(BcinvError):
    """Internal consistency assertion failed (CLI exit code 3)."""
