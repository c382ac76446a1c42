"""Exception types shared across the package."""


class MahlerError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatchError(MahlerError, ValueError):
    """A point, exponent vector or polynomial has the wrong number of variables."""


class ZeroPolynomialError(MahlerError, ValueError):
    """The zero polynomial was passed to an operation that rejects it."""


class RootFindingError(MahlerError, RuntimeError):
    """Simultaneous root refinement did not reach the requested backward error."""


class PolynomialSyntaxError(MahlerError, ValueError):
    """A polynomial expression failed to parse.  `position` is a 0-based offset."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position
