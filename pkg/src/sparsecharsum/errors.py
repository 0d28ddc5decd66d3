"""Exception types shared across the package."""


class SparseCharSumError(Exception):
    """Base class for all package-specific errors."""


class FieldConstructionError(SparseCharSumError, ValueError):
    """Invalid field parameters: non-prime p, reducible modulus, singular basis."""


class GuardViolation(SparseCharSumError, RuntimeError):
    """A desk-scale guard was exceeded; names the limiting parameter."""

    def __init__(self, message: str, limit_name: str, limit: int, requested: int):
        super().__init__(f"{message} ({limit_name}={limit}, requested {requested})")
        self.limit_name = limit_name
        self.limit = limit
        self.requested = requested


class NotCertified(SparseCharSumError, RuntimeError):
    """A bound check was refused because its hypothesis could not be certified."""


class SpecParseError(SparseCharSumError, ValueError):
    """Malformed spec string; carries the offending column."""

    def __init__(self, message: str, text: str, col: int):
        super().__init__(f"{message} at col {col}: {text!r}")
        self.text = text
        self.col = col
