"""
The Devinatz-Hopkins series of the height 2 Lubin-Tate ring and the Cartier coordinate w1 = f1 / f.

f and f1 are built three independent ways: from the closed Lambda sums, as limits of the pi-normalized
logarithm coefficient sequence, and as limits of partial products of the transfer matrices.
"""
from __future__ import annotations

import logging
from typing import Iterable, Iterator, List, Tuple

from lambda_comb import Parity, enumerate_lambda
from witt import WittElem, WittParams
from .errors import StabilizationError
from .scaled_series import ScaledSeries, Series2x2, invert_unit

logger = logging.getLogger(__name__)

MAX_STABILIZATION_STEPS = 64


def _lambda_sum(q: int, params: WittParams, wmax: int, parity: Parity) -> ScaledSeries:
    """sum of u1^QI / pi^floor(|I|/2) over the parity class"""
    exps = {}
    for n in range(wmax):
        for seq in enumerate_lambda(q, n, parity):
            exps[n] = len(seq) // 2
    B = max(exps.values(), default=0)
    nums = [WittElem.zero(params)] * wmax
    for n, e in exps.items():
        nums[n] = WittElem.from_int(params.p ** (B - e), params)
    return ScaledSeries(nums, B, None, params)


def f_series(q: int, params: WittParams, wmax: int) -> ScaledSeries:
    """f = sum over I in Lambda^even of u1^QI / pi^(|I|/2)"""
    return _lambda_sum(q, params, wmax, Parity.EVEN)


def f1_series(q: int, params: WittParams, wmax: int) -> ScaledSeries:
    """f1 = sum over I in Lambda^odd of u1^QI / pi^((|I|-1)/2)"""
    return _lambda_sum(q, params, wmax, Parity.ODD)


def m_sequence(q: int, params: WittParams, count: int, wmax: int) -> List[ScaledSeries]:
    """m_0 = 1, m_1 = u1/pi, m_n = (u1^(q^(n-1)) / pi) m_(n-1) + m_(n-2) / pi"""
    seq = [ScaledSeries.one(params, wmax), ScaledSeries.variable(params, wmax).divide_by_pi()]
    for n in range(2, count):
        seq.append((seq[n - 1].shift(q ** (n - 1)) + seq[n - 2]).divide_by_pi())
    return seq[:count]


def normalized_m_sequence(q: int, params: WittParams, count: int, wmax: int) -> List[ScaledSeries]:
    """pi^n m_2n and pi^(n+1) m_(2n+1)"""
    return [m.times_pi((n + 1) // 2) for n, m in enumerate(m_sequence(q, params, count, wmax))]


def _normalized_pairs(q: int, params: WittParams, wmax: int) -> Iterator[Tuple[ScaledSeries, ScaledSeries]]:
    even, odd = ScaledSeries.one(params, wmax), ScaledSeries.variable(params, wmax)
    n = 0
    while True:
        yield even, odd
        even = even + odd.shift(q ** (2 * n + 1)).divide_by_pi()
        odd = even.shift(q ** (2 * n + 2)) + odd
        n += 1


def stable_limit(iterates: Iterable, max_steps: int = MAX_STABILIZATION_STEPS):
    """The first iterate equal to its predecessor"""
    previous = None
    for step, current in enumerate(iterates):
        if previous is not None and current == previous:
            logger.debug('stabilized after %d iterates', step)
            return current
        if step > max_steps:
            break
        previous = current
    raise StabilizationError(f'no stabilization within {max_steps} iterates')


def f_and_f1_from_m_sequence(q: int, params: WittParams, wmax: int) -> Tuple[ScaledSeries, ScaledSeries]:
    """(f, f1) as limits of the normalized sequence"""
    return stable_limit(_normalized_pairs(q, params, wmax))


def ratio_sequence(q: int, params: WittParams, count: int, wmax: int) -> List[ScaledSeries]:
    """
    F_n = M_(2n+1) / M_2n by the fractional-linear recursion
    F_(n+1) = ((u1^(q^(2n+2) + q^(2n+1)) + pi) F_n + pi u1^(q^(2n+2))) / (u1^(q^(2n+1)) F_n + pi), F_0 = u1.
    The denominator is pi times a unit, so both sides are divided by pi before inverting.
    """
    out = [ScaledSeries.variable(params, wmax)]
    for n in range(count - 1):
        F = out[-1]
        a, b = q ** (2 * n + 2), q ** (2 * n + 1)
        numerator = F.shift(a + b) + F.scale(params.p) + ScaledSeries.monomial(params, wmax, a, params.p)
        denominator = F.shift(b).divide_by_pi() + ScaledSeries.one(params, wmax)
        out.append((numerator * invert_unit(denominator)).divide_by_pi())
    return out


def transfer_matrix(q: int, params: WittParams, i: int, wmax: int) -> Series2x2:
    """T_i = [[1 + u1^(q^2i + q^(2i-1)) / pi, u1^(q^2i)], [u1^(q^(2i-1)) / pi, 1]]"""
    even, odd = q ** (2 * i), q ** (2 * i - 1)
    one = ScaledSeries.one(params, wmax)
    return Series2x2(one + ScaledSeries.monomial(params, wmax, even + odd).divide_by_pi(),
                     ScaledSeries.monomial(params, wmax, even),
                     ScaledSeries.monomial(params, wmax, odd).divide_by_pi(),
                     one)


def _partial_products(q: int, params: WittParams, wmax: int) -> Iterator[Series2x2]:
    product = transfer_matrix(q, params, 1, wmax)
    i = 1
    while True:
        yield product
        i += 1
        product = transfer_matrix(q, params, i, wmax) @ product


def matrix_partial_product(q: int, params: WittParams, n: int, wmax: int) -> Series2x2:
    """T_n ... T_1"""
    for i, product in enumerate(_partial_products(q, params, wmax), start=1):
        if i == n:
            return product


def f_and_f1_from_matrices(q: int, params: WittParams, wmax: int) -> Tuple[ScaledSeries, ScaledSeries]:
    """
    (f, f1) from the stabilized partial product, which maps u1 to (a u1 + b) / (c u1 + d):
    c u1 + d truncates f and a u1 + b truncates f1.
    """
    u1 = ScaledSeries.variable(params, wmax)
    numerator, denominator = stable_limit(product.act_on(u1) for product in _partial_products(q, params, wmax))
    return denominator, numerator


def w1_series(q: int, params: WittParams, wmax: int) -> ScaledSeries:
    """w1 = f1 / f"""
    return f1_series(q, params, wmax) * invert_unit(f_series(q, params, wmax))


def w1_matrix_series(q: int, params: WittParams, wmax: int) -> ScaledSeries:
    """w1 from the transfer matrices alone, independent of Lambda enumeration"""
    f, f1 = f_and_f1_from_matrices(q, params, wmax)
    return f1 * invert_unit(f)
