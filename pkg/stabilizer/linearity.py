from __future__ import annotations

import logging
from typing import NamedTuple, Optional

from series import compose
from utils.random_elements import RandomElements
from witt import WittParams
from .action_driver import AUTO, act_u1
from .errors import OracleMismatchError
from .group import GroupElem

logger = logging.getLogger(__name__)

PRODUCT_ORDERS = ('gh', 'hg')


class LinearityReport(NamedTuple):
    """
    linear: whether g.u1 = c u1 modulo (p^M, u1^W)
    witness: the first degree n >= 2 with a nonzero coefficient, None when linear
    criterion: for g = alpha with q = p, whether (sigma(alpha) / alpha)^(p+1) = 1 to the precision that
        decides the coefficient of u1^(p+2); None otherwise
    """
    linear: bool
    witness: Optional[int] = None
    criterion: Optional[bool] = None

    def __bool__(self):
        return self.linear


def _criterion(g: GroupElem) -> Optional[bool]:
    params = g.params
    if not g.is_witt() or params.f != 1:
        return None
    # the u1^(p+2) coefficient is beta (beta^(p+1) - 1) / p
    lifted = g.alpha0.lift(params.with_precision(params.N + 1))
    beta = lifted.frobenius() * lifted.inv()
    return beta ** (params.p + 1) == 1


def classify_linear(g: GroupElem, wmax: int, method: str = AUTO) -> LinearityReport:
    result = act_u1(g, wmax, method)
    witness = next((n for n in range(2, wmax) if any(result.coefficient(n).coeffs)), None)
    return LinearityReport(witness is None, witness, _criterion(g))


def composition_convention(params: WittParams, rng: RandomElements, pairs: int = 4, wmax: int = 12,
                           slack: Optional[int] = None) -> str:
    """
    The product order c for which g.(h.u1) = c(g, h).u1, i.e. Gamma_c(g,h) = Gamma_h(Gamma_g), decided on random
    pairs in which one factor lies in W(F_{q^2})^x.
    The coefficients of g.u1 modulo p^M depend on g beyond p^M, so the elements and their products are formed
    with slack extra digits, slack defaulting to the budget W, and every action is taken modulo p^M.
    :raises OracleMismatchError: neither order, or a different order for different pairs, holds
    """
    work = params.with_precision(params.N + (wmax if slack is None else slack))
    found = set()
    for i in range(pairs):
        g = rng.group_element(work, witt_only=i % 2 == 1)
        h = rng.group_element(work, witt_only=i % 2 == 0)
        composite = compose(act_u1(h, wmax, precision=params.N).as_u1_series(),
                            act_u1(g, wmax, precision=params.N).as_u1_series())
        products = {'gh': g * h, 'hg': h * g}
        matching = {order for order, product in products.items()
                    if (act_u1(product, wmax, precision=params.N).as_u1_series() - composite)
                    .valuation_bound() >= params.N}
        if len(matching) != 1:
            raise OracleMismatchError(f'pair {i}: orders matching the composition: {sorted(matching)}')
        found |= matching
    if len(found) != 1:
        raise OracleMismatchError(f'the product order is not uniform: {sorted(found)}')
    order = found.pop()
    logger.info('composition convention for q=%d: %s', params.q, order)
    return order
