"""Exception hierarchy for gtcodes."""

from __future__ import annotations


class GTCError(Exception):
    """Base class for every error raised by gtcodes."""


class NotPrimePower(GTCError, ValueError):
    pass


class TooLarge(GTCError, ValueError):
    pass


class DivisionByZero(GTCError, ZeroDivisionError):
    pass


class DimensionTooLarge(GTCError, ValueError):
    pass


class InvalidExponent(GTCError, ValueError):
    pass


class EmptyU(GTCError, ValueError):
    pass


class LengthMismatch(GTCError, ValueError):
    pass


class ContextMismatch(GTCError, ValueError):
    pass


class ZeroIdeal(GTCError, ValueError):
    """All ideal generators are zero; the recovered exponent set is empty."""


class EmptyPolytope(GTCError, ValueError):
    pass


class BudgetExceeded(GTCError):
    """A search would exceed its work budget.

    ``required`` is the amount of work the full search needs (when known) and
    ``partial`` holds whatever result was certified before stopping.
    """

    def __init__(self, message: str, required: int | None = None, partial=None):
        super().__init__(message)
        self.required = required
        self.partial = partial
