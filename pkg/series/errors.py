class SeriesError(Exception):
    """Base class for truncated power series errors"""


class PrecisionBudgetExceeded(SeriesError, ArithmeticError):
    """A denominator outgrew the budget, or the achieved precision fell below the requested one"""


class CompositionError(SeriesError, ValueError):
    """The inner series of a composition has a nonzero constant term"""


class SeriesMismatchError(SeriesError, ValueError):
    """Series over different rings or with different truncations were combined"""


class StabilizationError(SeriesError, RuntimeError):
    """A limit did not stabilize within the allowed number of iterates"""
