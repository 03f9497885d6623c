"""Exception hierarchy shared by every module of the package."""


class SeriesError(Exception):
    """Base class for all errors raised by lagrange_fps."""


class MalformedInputError(SeriesError, ValueError):
    pass


class PrecisionExceededError(SeriesError, IndexError):
    """A coefficient beyond the known truncation precision was requested."""


class NotInvertibleError(SeriesError, ZeroDivisionError):
    """Multiplicative inverse of a series with zero constant term."""


class NotComposableError(SeriesError, ValueError):
    """Inner series of a composition has a nonzero constant term."""


class NotRegularError(SeriesError, ValueError):
    """Compositional inverse requested for a series that is not regular."""


class PreconditionError(SeriesError, ValueError):
    pass


class ZeroAtPrecisionError(SeriesError, ArithmeticError):
    """Series is identically zero through its precision, so its order is unknown."""

    def __init__(self, message, precision=None):
        super().__init__(message)
        self.precision = precision


class DivisionOrderError(SeriesError, ValueError):
    """Quotient would not be a power series (numerator order below denominator order)."""
