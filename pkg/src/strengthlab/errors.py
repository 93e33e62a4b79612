"""Exception hierarchy.

Two families matter to callers (and to the CLI exit codes): ``MathInputError``
for inputs that are mathematically unusable, and ``ResourceBudgetExceeded``
for computations that were cut off by a configured cap.
"""


class StrengthLabError(Exception):
    """Base class for all library errors."""


class MathInputError(StrengthLabError):
    pass


class ResourceBudgetExceeded(StrengthLabError):
    pass


class DivisionByZero(MathInputError, ZeroDivisionError):
    pass


class FieldMismatch(MathInputError):
    pass


class RingMismatch(MathInputError):
    pass


class ZeroInput(MathInputError):
    pass


class UnsupportedField(MathInputError):
    pass


class Char2Unsupported(UnsupportedField):
    pass


class NotHomogeneous(MathInputError):
    pass


class NotQuadric(MathInputError):
    pass


class UnitIdeal(MathInputError):
    pass


class VariableOutOfRange(MathInputError):
    pass


class InvalidMinorSize(MathInputError):
    pass


class ParamOutOfRange(MathInputError):
    pass


class SearchSpaceTooLarge(ResourceBudgetExceeded):
    def __init__(self, size, cap):
        super().__init__(f"search space of size {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


class IdealSyntaxError(MathInputError):
    """Malformed ideal file or polynomial text; carries a 1-based position."""

    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


class NonHomogeneous(IdealSyntaxError, NotHomogeneous):
    pass


class UnknownVariable(IdealSyntaxError):
    pass


class CodimMismatch(UserWarning):
    """Explicit c passed to a singular-locus computation differs from codim(Q)."""
