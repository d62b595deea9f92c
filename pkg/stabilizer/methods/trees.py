from __future__ import annotations

import logging
from typing import Callable, Tuple

from series import PrecisionMonitor
from trees import enumerate_trees, summed_index
from witt import ScaledWitt, WittElem
from .abstract_method import ActionMethod
from ..action_result import Method
from ..errors import OracleMismatchError
from ..group import GroupElem
from ..labels import LabelFactors, root_labels
from ..powers import PowerTable

logger = logging.getLogger(__name__)

CROSSCHECK_WEIGHT = 4

PowerLookup = Callable[[int, int], Tuple[WittElem, int]]


class TreesMethod(ActionMethod):
    """
    gamma_n as the sum of indices of all labelled trees of weight n, grouped by root label:
    gamma_n = (1/alpha0) sum_(H, I) factor(H, I) [u1^(n - QI)] G^QH, the label ((0), ()) excluded.
    The factors are brought to one denominator so a degree costs a single dot product, and the powers of G
    are kept in an incremental table. Small weights are checked against an explicit enumeration of the trees.
    """
    name = 'trees'
    method = Method.TREES

    def __init__(self, g: GroupElem, wmax: int, monitor: PrecisionMonitor, crosscheck_weight: int = CROSSCHECK_WEIGHT):
        super().__init__(g, wmax, monitor)
        self.crosscheck_weight = crosscheck_weight
        self.factors = LabelFactors(root_labels(self.q, wmax, self.alternating), g.alpha0, g.alpha1)
        self.monitor.observe_exponent(self.factors.denom_exp, 'in the vertex factors')
        self.table = PowerTable(self.params, max((label.qh for label in self.factors.labels), default=1))

    def _solve_degree(self, n: int) -> ScaledWitt:
        self.table.advance()
        value = self.inverse_alpha0 * self._label_sum(n, self.table.entry)
        if n <= self.crosscheck_weight:
            self._crosscheck(n, value)
        return value

    def _accept(self, n: int, value: WittElem, prec: int):
        self.table.set_gamma(n, value, prec)

    def _label_sum(self, n: int, power: PowerLookup) -> ScaledWitt:
        """
        sum over root labels (H, I) other than ((0), ()) of factor(H, I) [u1^(n - QI)] G^QH, the tree sum of
        weight n with the root label taken first.
        """
        params = self.params
        factors = self.factors
        # numerators over p^denom_exp are reduced mod p^N
        prec = params.N - factors.denom_exp
        pairs = []
        one = WittElem.one(params)
        for label in factors.labels:
            if label.qi > n or label.is_linear:
                continue
            s = n - label.qi
            if label.qh == 0:
                if s:
                    continue
                value, value_prec = one, params.N
            else:
                if s < label.qh:
                    continue
                value, value_prec = power(label.qh, s)
            prec = min(prec, value_prec + factors.valuations[label])
            if any(value.coeffs):
                pairs.append((factors.numerators[label], value))
        return ScaledWitt(WittElem.dot(pairs, params), factors.denom_exp, prec)

    def _crosscheck(self, n: int, value: ScaledWitt):
        alpha1 = None if self.alternating else self.g.alpha1
        expected = summed_index(enumerate_trees(self.q, n, self.alternating), self.g.alpha0, alpha1)
        # both sides are compared to the lower of their precisions
        if expected != value:
            raise OracleMismatchError(f'{self.name}: gamma_{n} = {value!r} but the trees of weight {n} '
                                      f'sum to {expected!r}')
        logger.debug('%s: gamma_%d agrees with the enumerated trees modulo p^%d', self.name, n,
                     min(expected.prec, value.prec))
