"""Exception hierarchy.

Anything derived from :class:`NumericError` maps to CLI exit status 2;
plain usage mistakes are reported with status 1.
"""


class UnitChargeError(Exception):
    """Base class for all package errors."""


class NumericError(UnitChargeError):
    """A computation could not produce a trustworthy number."""

    def __init__(self, message, **details):
        super().__init__(message)
        self.details = details


class DomainError(NumericError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class QuadratureError(NumericError):
    """Quadrature failed to meet its tolerance; carries the error estimate."""


class ConsistencyError(NumericError):
    """Two independent evaluation routes disagreed beyond tolerance."""


class DimensionError(UnitChargeError, TypeError):
    """Incompatible physical dimensions."""


class UnitSystemError(UnitChargeError, ValueError):
    """Quantity expressed in the wrong unit system for an operation."""


class ConversionError(UnitChargeError, ValueError):
    """No conversion rule exists for a dimension."""
