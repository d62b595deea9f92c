"""
The action on the degree -2 coordinate u: g.u = u * sum_n theta_n u1^n.

With G = g.u1, the theta_n are determined by the identity
    (sum_n theta_n u1^n) f(G) = sigma(alpha1) f1 + alpha0 f,
which is solved twice: in closed form, theta = x * (1 / f(G)) with the reciprocal expanded degree by degree,
and by the recursion theta_n = x_n - sum_(k >= 1) [u1^k] f(G) theta_(n-k).
"""
from __future__ import annotations

import logging
from typing import List, Optional

from series import PrecisionMonitor, f_series, f1_series
from witt import ScaledWitt
from .action_driver import ActionDriver, AUTO, internal_element
from .action_result import ActionResult, Target
from .errors import OracleMismatchError
from .gating import requires_odd_residue_degree
from .group import GroupElem
from .powers import PowerTable, composed_coefficient

logger = logging.getLogger(__name__)


def _convolve(a: List[ScaledWitt], b: List[ScaledWitt], n: int, start: int = 0) -> ScaledWitt:
    """sum of a_i b_(n-i) over start <= i <= n"""
    total = ScaledWitt.zero(a[0].params)
    for i in range(start, n + 1):
        total = total + a[i] * b[n - i]
    return total


def theta_values(g: GroupElem, gammas: List[ScaledWitt], monitor: PrecisionMonitor) -> List[ScaledWitt]:
    """
    theta_0, ..., theta_(W-1) for an element at internal precision with known g.u1 coefficients
    :raises OracleMismatchError: the closed form and the recursion disagree
    """
    params = g.params
    wmax = len(gammas)
    f, f1 = f_series(params.q, params, wmax), f1_series(params.q, params, wmax)
    x = (f1 * g.alpha1.frobenius() + f * g.alpha0).scaled_coefficients()
    even_terms = [(L, c) for L, c in enumerate(f.scaled_coefficients()) if L and not c.is_zero()]
    table = PowerTable.from_coefficients(gammas, max((L for L, _ in even_terms), default=1))
    y = [ScaledWitt.of(1, params)] + [composed_coefficient(table, even_terms, k) for k in range(1, wmax)]

    reciprocal = [ScaledWitt.of(1, params)]
    for m in range(1, wmax):
        reciprocal.append(-_convolve(y, reciprocal, m, start=1))
    closed = [_convolve(x, reciprocal, n) for n in range(wmax)]

    recursive = []
    for n in range(wmax):
        recursive.append(x[n] - _convolve(y, recursive, n, start=1))

    for n, (a, b) in enumerate(zip(closed, recursive)):
        monitor.observe(a, f'at theta_{n}')
        if a != b:
            raise OracleMismatchError(f'theta_{n}: closed form {a!r} against recursion {b!r}')
    return closed


@requires_odd_residue_degree(what='the action on u')
def act_u(g: GroupElem, wmax: int, method: str = AUTO, budget: Optional[int] = None,
          precision: Optional[int] = None) -> ActionResult:
    """
    g.u / u modulo (p^M, u1^W), M defaulting to the precision of g, see internal_element
    :param method: how g.u1 is computed on the way, see ActionDriver
    :raises ResidueDegreeParityError: f is even
    """
    internal, monitor = internal_element(g, wmax, budget, precision)
    driver = ActionDriver(method)
    gammas = driver.gammas(internal, wmax, monitor)
    thetas = theta_values(internal, gammas, monitor)
    coefficients = monitor.finalize(thetas, g.params)
    logger.info('%s: g.u for q=%d modulo (p^%d, u1^%d), worst denominator p^%d', driver.method.name,
                g.params.q, monitor.target, wmax, monitor.worst_denominator)
    return ActionResult.from_coefficients(coefficients, driver.method.method, Target.U, wmax,
                                          worst_denominator=monitor.worst_denominator,
                                          lowest_precision=monitor.lowest_precision)
