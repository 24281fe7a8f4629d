"""Exception hierarchy.

Every error raised by the library derives from :class:`SWCrossError`.  The
CLI maps :class:`InputError` subclasses to exit status 2 and the remaining
contract violations to exit status 1.
"""


class SWCrossError(Exception):
    """Base class for all library errors."""


class ContractError(SWCrossError, ValueError):
    """An operation was called outside its documented preconditions."""


class DimensionError(ContractError):
    """Operands live in exterior algebras on different numbers of generators."""


class ValidationError(SWCrossError):
    """A manifold description violates one of the standing hypotheses."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class CharacteristicError(SWCrossError):
    """A vector fails Q(c, h) = Q(h, h) mod 2 on some basis vector."""


class LatticeInconsistencyError(SWCrossError):
    """Derived integrality fails, e.g. c^2 - sigma is not divisible by 8."""


class ParityError(SWCrossError):
    """A quantity that must be even (c_ij, 2m = c + K) is odd."""


class ConeError(SWCrossError):
    """A period direction does not lie in the positive cone."""


class PreconditionError(SWCrossError):
    """A hypothesis of a certified statement fails for the given input."""


class InputError(SWCrossError):
    """Malformed input document or command-line value."""


class IntegralityError(SWCrossError, ArithmeticError):
    """A result that must be integral carries a non-unit denominator."""
