"""Exception types shared across the package."""


class MHPError(Exception):
    """Base class for errors raised by mhpoly."""


class NotRoundError(MHPError, ValueError):
    """A polynomial cannot be read as a table of round mixed Hodge numbers."""


class ResourceCapError(MHPError):
    """A brute-force computation would exceed the configured size cap."""


class ClosureError(MHPError, ValueError):
    """A set of matrices handed to the Weyl-sum engine is not a group."""


class IntegralityError(MHPError, ArithmeticError):
    """A Weyl-group average came out with non-integer coefficients.

    The offending polynomial is kept on ``.polynomial`` so callers can still
    report it.
    """

    def __init__(self, message, polynomial=None, offending=()):
        super().__init__(message)
        self.polynomial = polynomial
        self.offending = tuple(offending)
