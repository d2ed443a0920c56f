"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class ArtSchreierError(Exception):
    """Base class for every error raised by this package."""


class ReduciblePolynomial(ArtSchreierError, ValueError):
    pass


class DegreeMismatch(ArtSchreierError, ValueError):
    pass


class ContextMismatch(ArtSchreierError, ValueError):
    """Operands come from different residue fields."""


class DivisionByZero(ArtSchreierError, ZeroDivisionError):
    pass


class PrecisionExhausted(ArtSchreierError, ArithmeticError):
    """A requested coefficient lies beyond the known precision."""


class DomainError(ArtSchreierError, ValueError):
    pass


class ParseError(ArtSchreierError, ValueError):
    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownSymbol(ParseError):
    pass


class ZeroCoset(ArtSchreierError, ValueError):
    pass


class DegeneratePlane(ArtSchreierError, ValueError):
    pass


class BudgetExceeded(ArtSchreierError, RuntimeError):
    pass


class NonIntegralExponent(ArtSchreierError, ValueError):
    pass
