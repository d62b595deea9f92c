from __future__ import annotations

import logging
from typing import List, Sequence

from witt import ScaledWitt, WittElem, WittParams
from .errors import PrecisionBudgetExceeded

logger = logging.getLogger(__name__)


class PrecisionMonitor:
    """
    Watches a computation running at internal precision N = M + budget.

    Every observed value contributes its denominator exponent and its precision; a denominator beyond
    the budget, or a finished value known below p^M, raises PrecisionBudgetExceeded instead of being
    silently truncated.

    Attributes:
        target: M, the requested output precision
        budget: B, the allowed denominator exponent
        worst_denominator: largest denominator exponent observed
        lowest_precision: smallest precision among finished values
    """

    def __init__(self, target: int, budget: int):
        self.target = target
        self.budget = budget
        self.worst_denominator = 0
        self.lowest_precision = None

    def observe(self, value: ScaledWitt, where: str = '') -> ScaledWitt:
        if value.exp > self.worst_denominator:
            self.worst_denominator = value.exp
        if value.exp > self.budget:
            raise PrecisionBudgetExceeded(f'denominator p^{value.exp} {where} exceeds the budget p^{self.budget}')
        return value

    def observe_exponent(self, exp: int, where: str = ''):
        if exp > self.worst_denominator:
            self.worst_denominator = exp
        if exp > self.budget:
            raise PrecisionBudgetExceeded(f'denominator p^{exp} {where} exceeds the budget p^{self.budget}')

    def finish(self, value: ScaledWitt, where: str = '') -> ScaledWitt:
        """Record a finished value, which must be known modulo p^M"""
        self.observe(value, where)
        if self.lowest_precision is None or value.prec < self.lowest_precision:
            self.lowest_precision = value.prec
        if value.prec < self.target:
            raise PrecisionBudgetExceeded(f'value {where} is known modulo p^{value.prec} only, '
                                          f'p^{self.target} was requested; raise the budget')
        return value

    def finalize(self, values: Sequence[ScaledWitt], params: WittParams) -> List[WittElem]:
        """Finished integral values, reduced into params at the target precision M"""
        params = params.with_precision(self.target)
        out = []
        for n, value in enumerate(values):
            self.finish(value, f'at degree {n}')
            out.append(WittElem(value.to_integral().coeffs, params))
        logger.debug('finalized %d values: worst denominator p^%d, lowest precision p^%s', len(out),
                     self.worst_denominator, self.lowest_precision)
        return out
