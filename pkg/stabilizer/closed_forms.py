"""
Closed formulas for the action in low degrees: the first four coefficients of g.u1 for any g, and for
q = p the action of alpha in W(F_{p^2})^x on u1 and on u, written through beta = sigma(alpha) / alpha.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Dict, Optional

from series import PrecisionMonitor
from witt import ScaledWitt, WittElem, ParamsMismatchError
from .gating import requires_prime_residue_field
from .group import GroupElem

CLOSED_BUDGET = 4


@dataclass(frozen=True)
class LowDegreeTable:
    """
    Closed-form coefficients keyed by u1-degree. The formulas describe the action only below u1^valid_below;
    entries at or beyond it are still evaluated but say nothing about the action.

    Attributes:
        coefficients: degree -> coefficient, modulo p^M
        valid_below: the u1-adic truncation the formulas hold to
    """
    coefficients: Dict[int, WittElem]
    valid_below: int

    def valid(self) -> Dict[int, WittElem]:
        return {n: c for n, c in self.coefficients.items() if n < self.valid_below}

    def __getitem__(self, degree: int) -> WittElem:
        return self.coefficients[degree]


def _finish(values: Dict[int, ScaledWitt], target_params, budget: int) -> Dict[int, WittElem]:
    monitor = PrecisionMonitor(target_params.N, budget)
    degrees = sorted(values)
    finished = monitor.finalize([values[n] for n in degrees], target_params)
    return dict(zip(degrees, finished))


def closed_gamma(g: GroupElem) -> Dict[int, WittElem]:
    """gamma_1, ..., gamma_4 of g.u1, with the extra terms that only exist for q = 2 and q = 3"""
    params = g.params.with_precision(g.params.N + CLOSED_BUDGET)
    a, c = g.alpha0.lift(params), g.alpha1.lift(params)
    b, d = a.frobenius(), c.frobenius()
    q = params.q
    inv = ScaledWitt(a.inv())
    norm_a = ScaledWitt(a * b)

    values = {1: ScaledWitt(b) * inv, 2: ScaledWitt(-(b * d)) * inv ** 2}
    if q == 2:
        values[3] = ScaledWitt(a * b * d ** 2 + (a ** 3 + b ** 3) * c) * inv ** 4
    else:
        values[3] = ScaledWitt(b * d ** 2) * inv ** 3
    if q == 2:
        one_minus_inverse_pi = 1 - ScaledWitt.of(1, params).divide_by_pi()
        values[4] = (norm_a * (-ScaledWitt(d ** 3) + one_minus_inverse_pi * (a ** 3 - b ** 3))
                     - ScaledWitt((c * d) * (a ** 3 + 4 * b ** 3))) * inv ** 5
    elif q == 3:
        values[4] = ScaledWitt((a ** 4 + b ** 4) * c - a * b * d ** 3) * inv ** 5
    else:
        values[4] = ScaledWitt(-(b * d ** 3)) * inv ** 4
    return _finish(values, g.params, CLOSED_BUDGET)


def _prime_of(alpha: WittElem, p: Optional[int]) -> int:
    if p is not None and p != alpha.params.p:
        raise ParamsMismatchError(f'alpha lives over p={alpha.params.p}, not p={p}')
    return alpha.params.p


def _beta(alpha: WittElem) -> ScaledWitt:
    return ScaledWitt(alpha.frobenius() * alpha.inv())


@requires_prime_residue_field(what='the low degree formulas')
def low_degree_closed(alpha: WittElem, p: Optional[int] = None) -> LowDegreeTable:
    """
    The coefficients of alpha.u1 at degrees 1, p+2, 2p+3 and 3p+4 for q = p; they describe alpha.u1 modulo
    u1^min(4p+5, p^2).
    """
    p = _prime_of(alpha, p)
    params = alpha.params.with_precision(alpha.params.N + CLOSED_BUDGET)
    beta = _beta(alpha.lift(params))
    power = beta ** (p + 1)
    first = beta * (power - 1)
    second = (p + 1) * power - 1
    values = {
        1: beta,
        p + 2: first.divide_by_pi(),
        2 * p + 3: (first * second).divide_by_pi(2),
        3 * p + 4: (first * (second * second + comb(p + 1, 2) * power * (power - 1))).divide_by_pi(3),
    }
    return LowDegreeTable(_finish(values, alpha.params, CLOSED_BUDGET), min(4 * p + 5, p * p))


@requires_prime_residue_field(what='the low degree formulas')
def low_degree_u_closed(alpha: WittElem, p: Optional[int] = None) -> LowDegreeTable:
    """
    The coefficients of alpha.u / u at degrees 0, p+1 and 2p+2 for q = p; they describe alpha.u modulo
    u1^min(3p+3, p^2).
    """
    p = _prime_of(alpha, p)
    params = alpha.params.with_precision(alpha.params.N + CLOSED_BUDGET)
    lifted = ScaledWitt(alpha.lift(params))
    power = _beta(alpha.lift(params)) ** (p + 1)
    values = {
        0: lifted,
        p + 1: (lifted * (1 - power)).divide_by_pi(),
        2 * p + 2: (lifted * p * power * (1 - power)).divide_by_pi(2),
    }
    return LowDegreeTable(_finish(values, alpha.params, CLOSED_BUDGET), min(3 * p + 3, p * p))
