"""Exception hierarchy shared by every grosscalc module.

Every domain error carries a ``code`` used by the command line front end
when reporting failures on stderr.
"""


class GrossError(Exception):
    """Base class of all domain errors raised by grosscalc."""

    @property
    def code(self) -> str:
        return type(self).__name__


class NotExactlyDivisible(GrossError):
    pass


class DivisionByZero(GrossError, ZeroDivisionError):
    pass


class NonIntegerGrosspower(GrossError):
    pass


class NotIntegerValued(GrossError):
    pass


class ParityRequired(NotIntegerValued):
    """A sign depends on the parity of a quantity that has none."""


class UnrepresentableProduct(GrossError):
    pass


class UnrepresentableValue(GrossError):
    """The result has no record in the supported term shapes (e.g. G^G)."""


class UnsupportedExponent(GrossError):
    pass


class SingularityNotRemovable(GrossError):
    pass


class ExpressionSyntaxError(GrossError):
    """Malformed expression text; ``position`` is a 0-based column."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position

    @property
    def code(self) -> str:
        return "SyntaxError"


class UnknownName(GrossError):
    pass
