"""Exception hierarchy.

Three groups matter to callers (and map onto CLI exit codes):

* :class:`ParseError` - malformed input text (exit 2)
* :class:`BudgetError` - a search budget or size guard tripped (exit 3)
* everything else under :class:`SunflowerError` - domain errors (exit 1)
"""

from __future__ import annotations


class SunflowerError(Exception):
    """Base class for all package errors."""


class ParseError(SunflowerError, ValueError):
    """Input text could not be parsed."""

    def __init__(self, message: str, position: int | None = None) -> None:
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class SpecSyntaxError(ParseError):
    pass


class ArityError(ParseError):
    pass


class NonPositiveParameter(ParseError):
    pass


class NotASunflower(SunflowerError):
    pass


class NotUniform(SunflowerError):
    pass


class NotInfinite(SunflowerError):
    pass


class Uncertified(SunflowerError):
    """An oracle answered Unknown where a certified answer was required."""


class OracleIncomplete(Uncertified):
    pass


class UncertifiedBound(Uncertified):
    pass


class UncertifiedCore(Uncertified):
    pass


class BoundViolation(SunflowerError):
    def __init__(self, member, bound: int) -> None:
        self.member = member
        self.bound = bound
        super().__init__(f"member {member} has more than {bound} elements")


class PoolInfinite(SunflowerError):
    pass


class BudgetError(SunflowerError):
    pass


class BudgetExhausted(BudgetError):
    """The candidate budget ran out; retry with a larger budget."""


class TooLarge(BudgetError):
    pass


class PoolTooLarge(BudgetError):
    pass
