"""Exception types shared across the package."""


class FqtError(Exception):
    """Base class for errors raised by fqtlab."""


class BudgetExceeded(FqtError):
    """An operation would materialize an object larger than its budget allows."""


class PolyParseError(FqtError, ValueError):
    """A polynomial literal could not be parsed."""


class TableDomainError(FqtError, KeyError):
    """A function-table lookup outside the table's domain."""


class NotCoprime(FqtError, ValueError):
    """CRT moduli share a nonconstant common factor.

    Carries the offending pair of modulus indices in ``pair``.
    """

    def __init__(self, message, pair):
        super().__init__(message)
        self.pair = pair


class ExactDivisionError(FqtError, ArithmeticError):
    """A division that was required to be exact left a remainder."""
