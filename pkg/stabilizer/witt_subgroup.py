"""
The action of the unit group of W(F_{q^2}) on u1 and u. For odd f only q-alternating trees contribute,
and g.u1 is concentrated in degrees 1 mod p+1 while g.u / u is concentrated in degrees 0 mod p+1.
"""
from __future__ import annotations

import logging
from typing import List, Optional, Sequence, Union

from lambda_comb import enumerate_weak_compositions
from witt import ScaledWitt, WittElem
from .action_driver import ActionDriver, internal_element
from .action_on_u import theta_values
from .closed_forms import _prime_of
from .action_result import ActionResult, Method, Target
from .errors import IntegralityError
from .gating import requires_odd_residue_degree, requires_prime_residue_field
from .group import GroupElem
from .methods import WittAlternatingMethod

logger = logging.getLogger(__name__)


def degree_support_check(values: Union[ActionResult, Sequence[ScaledWitt]], p: int, residue: int = 1):
    """
    Asserts that every coefficient in a degree n with n != residue mod p+1 is exactly zero.
    :param values: a dense table of u1-coefficients
    :raises IntegralityError: a coefficient off the expected degrees does not vanish
    """
    if isinstance(values, ActionResult):
        degrees = values.by_degree()
    else:
        degrees = {n: v.num for n, v in enumerate(values)}
    for n, value in degrees.items():
        if n % (p + 1) != residue % (p + 1) and any(value.coeffs):
            raise IntegralityError(f'coefficient of u1^{n} is {value}, expected exactly 0')


def _strided(values: List[ScaledWitt], p: int, offset: int) -> List[ScaledWitt]:
    return values[offset::p + 1]


def _witt_gammas(alpha: WittElem, wmax: int, budget: Optional[int], precision: Optional[int]):
    internal, monitor = internal_element(GroupElem.witt(alpha), wmax, budget, precision)
    gammas = ActionDriver(WittAlternatingMethod.name).gammas(internal, wmax, monitor)
    degree_support_check(gammas, alpha.params.p)
    return internal, monitor, gammas


@requires_odd_residue_degree(what='the Witt subgroup action on u1')
def witt_act_u1(alpha: WittElem, wmax: int, budget: Optional[int] = None,
                precision: Optional[int] = None) -> ActionResult:
    """
    alpha.u1 modulo (p^M, u1^W) as the table of its coefficients at degrees 1, p+2, 2p+3, ...
    :raises ResidueDegreeParityError: f is even
    """
    p = alpha.params.p
    _, monitor, gammas = _witt_gammas(alpha, wmax, budget, precision)
    coefficients = monitor.finalize(_strided(gammas, p, 1), alpha.params)
    logger.info('alternating trees: alpha.u1 for q=%d modulo (p^%d, u1^%d)', alpha.params.q, monitor.target, wmax)
    return ActionResult.from_coefficients(coefficients, Method.WITT_ALT, Target.U1, wmax, offset=1, stride=p + 1,
                                          worst_denominator=monitor.worst_denominator,
                                          lowest_precision=monitor.lowest_precision)


@requires_odd_residue_degree(what='the Witt subgroup action on u')
def witt_act_u(alpha: WittElem, wmax: int, budget: Optional[int] = None,
               precision: Optional[int] = None) -> ActionResult:
    """
    alpha.u / u modulo (p^M, u1^W) as the table tau_0, tau_1, ... of its coefficients at degrees 0, p+1, 2p+2, ...
    :raises ResidueDegreeParityError: f is even
    """
    p = alpha.params.p
    internal, monitor, gammas = _witt_gammas(alpha, wmax, budget, precision)
    thetas = theta_values(internal, gammas, monitor)
    degree_support_check(thetas, p, residue=0)
    coefficients = monitor.finalize(_strided(thetas, p, 0), alpha.params)
    return ActionResult.from_coefficients(coefficients, Method.WITT_ALT, Target.U, wmax, stride=p + 1,
                                          worst_denominator=monitor.worst_denominator,
                                          lowest_precision=monitor.lowest_precision)


def _composition_sum(deltas: List[ScaledWitt], total: int, length: int) -> ScaledWitt:
    """sum over weak compositions K of total with the given length of the product of delta_k over K"""
    result = ScaledWitt.zero(deltas[0].params)
    for composition in enumerate_weak_compositions(total, length):
        term = ScaledWitt.of(1, result.params)
        for k in composition:
            term = term * deltas[k]
        result = result + term
    return result


@requires_prime_residue_field(what='the delta recursion')
def witt_act_u1_recursion(alpha: WittElem, p: Optional[int] = None, budget: Optional[int] = None,
                          precision: Optional[int] = None) -> ActionResult:
    """
    delta_0, ..., delta_(p-1), the coefficients of alpha.u1 at degrees 1 + (p+1)m modulo u1^(p^2+1), by
    delta_0 = beta and
        delta_m = -delta_(m-1) / pi + (beta / pi) sum_K prod_(k in K) delta_k,
    K running over the weak compositions of m-1 of length p+1, with beta - beta^(p^2) added for m = p-1.
    """
    p = _prime_of(alpha, p)
    wmax = p * p + 1
    internal, monitor = internal_element(GroupElem.witt(alpha), wmax, budget, precision)
    a = internal.alpha0
    beta = ScaledWitt(a.frobenius() * a.inv())
    deltas = [beta]
    for m in range(1, p):
        value = (beta * _composition_sum(deltas, m - 1, p + 1) - deltas[m - 1]).divide_by_pi()
        if m == p - 1:
            value = value + beta - beta ** (p * p)
        deltas.append(monitor.observe(value, f'at delta_{m}'))
    coefficients = monitor.finalize(deltas, alpha.params)
    return ActionResult.from_coefficients(coefficients, Method.WITT_RECURSION, Target.U1, wmax, offset=1,
                                          stride=p + 1, worst_denominator=monitor.worst_denominator,
                                          lowest_precision=monitor.lowest_precision)
