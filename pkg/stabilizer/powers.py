"""
Truncated powers G^L of a series G = sum_{k>=1} gamma_k u1^k with integral coefficients.

The degree-by-degree solvers only ever need [u1^s] G^L for s up to the degree being solved, and the
coefficient gamma_n enters [u1^n] G^L only through L = 1. PowerTable exploits this: it opens degree n for
every power before gamma_n is known, then records gamma_n.
"""
from __future__ import annotations

import logging
from typing import List, Sequence, Tuple

from witt import ScaledWitt, WittElem, WittParams

logger = logging.getLogger(__name__)


class PowerTable:
    """
    Incremental table rows[L][s] = [u1^s] G^L for 0 <= L <= max_power.

    The precision of rows[L][s] is the smallest precision among gamma_1, ..., gamma_(s-L+1), the only
    coefficients it depends on.

    Attributes:
        params: the ring of the coefficients
        max_power: largest power kept
        degree: the last opened degree
    """

    def __init__(self, params: WittParams, max_power: int):
        self.params = params
        self.max_power = max_power
        self.degree = 0
        zero, one = WittElem.zero(params), WittElem.one(params)
        self._gammas: List[WittElem] = [zero]
        self._prefix_prec: List[int] = [params.N]
        self.rows: List[List[WittElem]] = [[one]] + [[zero] for _ in range(max_power)]

    @classmethod
    def from_coefficients(cls, gammas: Sequence[ScaledWitt], max_power: int) -> PowerTable:
        """A table filled from known integral coefficients, gammas[0] being the (zero) constant term"""
        table = cls(gammas[0].params, max_power)
        for gamma in gammas[1:]:
            n = table.advance()
            table.set_gamma(n, gamma.to_integral(), gamma.prec)
        return table

    def advance(self) -> int:
        """Open the next degree n; [u1^n] G is provisionally zero until set_gamma"""
        n = self.degree + 1
        zero = WittElem.zero(self.params)
        self.rows[0].append(zero)
        self.rows[1].append(zero)
        gammas = self._gammas
        for L in range(2, self.max_power + 1):
            if L > n:
                self.rows[L].append(zero)
                continue
            previous = self.rows[L - 1]
            self.rows[L].append(WittElem.dot(((gammas[k], previous[n - k]) for k in range(1, n - L + 2)),
                                             self.params))
        self.degree = n
        return n

    def set_gamma(self, n: int, value: WittElem, prec: int):
        if n != self.degree or len(self._gammas) != n:
            raise ValueError(f'degree {n} is not the open degree {self.degree}')
        self._gammas.append(value)
        self._prefix_prec.append(min(self._prefix_prec[-1], prec))
        self.rows[1][n] = value

    def coefficient(self, L: int, s: int) -> WittElem:
        return self.rows[L][s]

    def precision(self, L: int, s: int) -> int:
        last = s - L + 1
        if L == 0 or last < 1:
            return self.params.N
        return self._prefix_prec[min(last, len(self._prefix_prec) - 1)]

    def entry(self, L: int, s: int) -> Tuple[WittElem, int]:
        return self.rows[L][s], self.precision(L, s)

    def scaled(self, L: int, s: int) -> ScaledWitt:
        return ScaledWitt(self.rows[L][s], 0, self.precision(L, s))


def truncated_powers(gammas: Sequence[WittElem], upto: int, max_power: int, params: WittParams) \
        -> List[List[WittElem]]:
    """
    rows[L][s] = [u1^s] G^L for s <= upto, recomputed from scratch by repeated multiplication.
    Coefficients of G beyond the given ones are taken as zero.
    """
    zero = WittElem.zero(params)
    G = list(gammas[:upto + 1]) + [zero] * max(0, upto + 1 - len(gammas))
    rows = [[WittElem.one(params)] + [zero] * upto]
    for L in range(1, max_power + 1):
        previous = rows[-1]
        row = [zero] * (upto + 1)
        for s in range(L, upto + 1):
            row[s] = WittElem.dot(((G[k], previous[s - k]) for k in range(1, s - L + 2)), params)
        rows.append(row)
    return rows


def composed_coefficient(table: PowerTable, terms: Sequence[Tuple[int, ScaledWitt]], n: int) -> ScaledWitt:
    """[u1^n] h(G) for h = sum of c u1^L over terms, L >= 1, from the open table"""
    total = ScaledWitt.zero(table.params)
    for L, c in terms:
        if L > n:
            break
        total = total + c * table.scaled(L, n)
    return total
