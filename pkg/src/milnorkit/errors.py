"""Exception hierarchy.

Every error raised by the library is a MilnorkitError.  The CLI maps
ParseError to exit code 2 and PreconditionError (and subclasses) to
exit code 3.
"""


class MilnorkitError(Exception):
    """Base class for all library errors."""


class ParseError(MilnorkitError):
    """Syntax error in an input expression, with a source position."""

    def __init__(self, message, pos=None):
        self.pos = pos
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)


class PreconditionError(MilnorkitError):
    """An operation was called outside its stated domain."""


class VariableCountMismatch(PreconditionError):
    """Operands declare different numbers of field variables."""


class PrecisionMismatch(PreconditionError):
    """Series operands carry different precisions."""


class DivisionByZero(PreconditionError):
    """Inversion of zero, or a zero denominator."""


class NotAUnit(PreconditionError):
    """A series with vanishing constant term where a unit is required."""
