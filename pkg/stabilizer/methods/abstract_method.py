from __future__ import annotations

import logging
from abc import ABCMeta, abstractmethod
from typing import List

from series import PrecisionMonitor
from witt import ScaledWitt, WittElem
from ..action_result import Method
from ..errors import IntegralityError
from ..group import GroupElem

logger = logging.getLogger(__name__)


class ActionMethod(metaclass=ABCMeta):
    """
    Computes g.u1 = sum_n gamma_n u1^n one degree at a time: gamma_n only depends on gamma_1, ..., gamma_(n-1).
    Subclasses say how a single degree is solved; the loop and the integrality check live here.

    Every value carries its own precision, so the monitor sees what each degree actually lost.

    Attributes:
        name: registry key of the method
        method: the tag reported in results
        alternating: whether only q-alternating root labels take part
        g: the group element, at the internal precision
        wmax: W, the coefficients gamma_0, ..., gamma_(W-1) are computed
        monitor: precision monitor of the run
        gammas: the coefficients solved so far, gammas[0] = 0
    """
    name: str = None
    method: Method = None
    alternating = False

    def __init__(self, g: GroupElem, wmax: int, monitor: PrecisionMonitor):
        self.g = g
        self.params = g.params
        self.q = g.params.q
        self.wmax = wmax
        self.monitor = monitor
        self.inverse_alpha0 = ScaledWitt(g.alpha0.inv())
        self.gammas: List[ScaledWitt] = [ScaledWitt.zero(self.params)]

    def solve(self) -> List[ScaledWitt]:
        self._prepare()
        for n in range(1, self.wmax):
            value = self.monitor.observe(self._solve_degree(n), f'at gamma_{n}')
            integral = self._integral(n, value)
            self.gammas.append(value)
            self._accept(n, integral, value.prec)
            logger.debug('%s: gamma_%d known modulo p^%d', self.name, n, value.prec)
        return self.gammas

    def _prepare(self):
        pass

    @abstractmethod
    def _solve_degree(self, n: int) -> ScaledWitt:
        """gamma_n from the coefficients of lower degree"""
        pass

    def _accept(self, n: int, value: WittElem, prec: int):
        pass

    def _integral(self, n: int, value: ScaledWitt) -> WittElem:
        if not value.is_integral():
            raise IntegralityError(f'{self.name}: gamma_{n} = {value!r} is not integral')
        return value.to_integral()

    def __repr__(self):
        return f'{self.__class__.__name__}(q={self.q}, wmax={self.wmax})'
