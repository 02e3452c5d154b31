class UHWError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(UHWError, ValueError):
    pass


class NotIntegralError(UHWError, ValueError):
    """Coordinates outside the integral classes handled here."""


class WrongCaseError(UHWError, ValueError):
    """A classifier was called on an input outside its case (e.g. regular vs singular)."""


class CoordinateCapError(UHWError, ValueError):
    pass


class LimitExceededError(UHWError):
    """An enumeration would exceed the configured size limit."""
