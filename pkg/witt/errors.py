class WittError(Exception):
    """Base class for every error raised by the Witt ring arithmetic"""


class InvalidParamsError(WittError, ValueError):
    """p is not prime, or f / N is not a positive integer"""


class ParamsMismatchError(WittError, ValueError):
    """Two operands live in different Witt rings (different p, f or N)"""


class NonUnitError(WittError, ArithmeticError):
    """Inversion of an element whose residue mod p vanishes"""


class NotDivisibleError(WittError, ArithmeticError):
    """Exact division by a power of p of an element that is not divisible by it"""


class ExpressionSyntaxError(WittError, ValueError):
    """An element expression could not be parsed"""
