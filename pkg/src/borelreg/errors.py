from __future__ import annotations
from typing import Optional


class Error(Exception):
    """Base class of all ``borelreg``-specific errors"""

    pass


class ParseError(Error, ValueError):
    """
    Raised when an ideal source string cannot be parsed.  ``position`` is the
    0-based offset into the source text at which the problem was detected, or
    `None` if the problem is not tied to a single position (e.g., a malformed
    JSON document).
    """

    def __init__(self, message: str, position: Optional[int] = None) -> None:
        self.message = message
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class UnknownVariableError(ParseError):
    """Raised when a term mentions a variable not declared in ``vars``"""

    pass


class NegativeExponentError(ParseError):
    """Raised when an exponent is negative"""

    pass


class ExponentOverflowError(ParseError, OverflowError):
    """Raised when an exponent is at least 2\\ :sup:`31`"""

    pass


class DimensionMismatchError(Error, ValueError):
    """
    Raised when monomials or ideals living in polynomial rings with different
    numbers of variables are combined
    """

    pass


class VariableIndexError(Error, IndexError):
    """Raised when a variable index lies outside ``1..n``"""

    pass


class DegenerateIdealError(Error, ValueError):
    """
    Raised when the zero ideal or the unit ideal is passed to an operation
    that is only defined for proper nonzero ideals (and when ``m(1)`` is
    requested)
    """

    pass


class NotBorelTypeError(Error):
    """
    Raised when an operation defined only for ideals of Borel type receives
    an ideal that is not of Borel type.  ``failing_index`` is the least ``i``
    for which ``I:(x_1,…,x_i)^∞ ≠ I:x_i^∞``.
    """

    def __init__(self, message: str, failing_index: int) -> None:
        self.failing_index = failing_index
        super().__init__(message)


class PreconditionError(Error):
    """Raised when a shortcut formula is applied outside its domain"""

    pass


class InconsistencyError(Error):
    """
    Raised when an internal consistency check fails; this always indicates a
    bug in ``borelreg``
    """

    pass


class ScaleGuardError(Error):
    """
    Raised when an ideal is too large for the Betti-number oracle under the
    current :envvar:`BOREL_SCALE_GUARD` setting
    """

    pass


class ConfigError(Error, ValueError):
    """Raised when a fuzzing configuration contains invalid settings"""

    pass


class RouteError(Error):
    """
    Raised when an invariant route cannot be found or returns a value of the
    wrong type
    """

    pass
