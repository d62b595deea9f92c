from __future__ import annotations

import logging
from typing import Dict, List, Optional, Tuple, Type

from series import PrecisionMonitor
from witt import InvalidParamsError, ScaledWitt
from .action_result import ActionResult, Target
from .errors import UnknownMethodError
from .group import GroupElem
from .methods import ActionMethod, RecursiveMethod, TreesMethod, FunctionalMethod, WittAlternatingMethod

logger = logging.getLogger(__name__)

AUTO = 'auto'
DEFAULT_METHOD = TreesMethod.name


def internal_element(g: GroupElem, wmax: int, budget: Optional[int] = None, precision: Optional[int] = None) \
        -> Tuple[GroupElem, PrecisionMonitor]:
    """
    g at the internal precision N = M + budget, and a monitor holding the run to M.

    The coefficients of g.u1 modulo p^M depend on the digits of g beyond p^M. An element known to p^N or
    beyond is reduced to p^N; one known to less is read with its missing digits zero, i.e. its coordinates
    are taken as exact. Expressions such as 1+3*z^2 are not exact at precision M: parse them at p^N.

    :param precision: M, defaults to the precision of g
    :param budget: B, defaults to W
    :raises InvalidParamsError: M < 1 or B < 0
    """
    M = g.params.N if precision is None else precision
    budget = wmax if budget is None else budget
    if M < 1 or budget < 0:
        raise InvalidParamsError(f'precision {M} and budget {budget} must be positive and nonnegative')
    if g.params.N < M + budget:
        logger.debug('%s is read with zero digits beyond p^%d', g, g.params.N)
    return g.lift(g.params.with_precision(M + budget)), PrecisionMonitor(M, budget)


class ActionDriver:
    """
    Computes g.u1 with one of several interchangeable methods, chosen by name. 'auto' picks the tree sum
    over an incremental power table.

    :param method_name: one of the keys of ActionDriver.methods, or 'auto'
    """
    methods: Dict[str, Type[ActionMethod]] = {
        cls.name: cls for cls in (RecursiveMethod, TreesMethod, FunctionalMethod, WittAlternatingMethod)
    }

    def __init__(self, method_name: str = AUTO, **options):
        name = DEFAULT_METHOD if method_name == AUTO else method_name
        if name not in self.methods:
            raise UnknownMethodError(method_name, list(self.methods) + [AUTO])
        self.method = self.methods[name]
        self.options = options

    def gammas(self, g: GroupElem, wmax: int, monitor: PrecisionMonitor) -> List[ScaledWitt]:
        """gamma_0, ..., gamma_(W-1) of an element already at internal precision"""
        return self.method(g, wmax, monitor, **self.options).solve()

    def act_u1(self, g: GroupElem, wmax: int, budget: Optional[int] = None,
               precision: Optional[int] = None) -> ActionResult:
        """
        g.u1 modulo (p^M, u1^W), M defaulting to the precision of g
        :raises PrecisionBudgetExceeded: the budget does not cover the denominators met
        """
        internal, monitor = internal_element(g, wmax, budget, precision)
        values = self.gammas(internal, wmax, monitor)
        coefficients = monitor.finalize(values, g.params)
        logger.info('%s: g.u1 for q=%d modulo (p^%d, u1^%d), worst denominator p^%d, lowest precision p^%s',
                    self.method.name, g.params.q, monitor.target, wmax, monitor.worst_denominator,
                    monitor.lowest_precision)
        return ActionResult.from_coefficients(coefficients, self.method.method, Target.U1, wmax,
                                              worst_denominator=monitor.worst_denominator,
                                              lowest_precision=monitor.lowest_precision)


def act_u1_recursive(g: GroupElem, wmax: int, budget: Optional[int] = None,
                     precision: Optional[int] = None) -> ActionResult:
    return ActionDriver(RecursiveMethod.name).act_u1(g, wmax, budget, precision)


def act_u1_trees(g: GroupElem, wmax: int, budget: Optional[int] = None,
                 precision: Optional[int] = None) -> ActionResult:
    return ActionDriver(TreesMethod.name).act_u1(g, wmax, budget, precision)


def act_u1_functional(g: GroupElem, wmax: int, budget: Optional[int] = None,
                      precision: Optional[int] = None) -> ActionResult:
    return ActionDriver(FunctionalMethod.name).act_u1(g, wmax, budget, precision)


def act_u1(g: GroupElem, wmax: int, method: str = AUTO, budget: Optional[int] = None,
           precision: Optional[int] = None) -> ActionResult:
    return ActionDriver(method).act_u1(g, wmax, budget, precision)
