from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional

from series import ScaledSeries
from witt import WittElem, WittParams


class Target(Enum):
    U1 = 'u1'
    U = 'u'


class Method(Enum):
    RECURSIVE = 'recursive'
    TREES = 'trees'
    FUNCTIONAL = 'functional'
    WITT_ALT = 'witt-alt'
    WITT_RECURSION = 'witt-recursion'
    LOW_DEGREE = 'low-degree'


@dataclass(frozen=True)
class ActionResult:
    """
    The coefficient table of one action computation.

    Entry k of the table is the coefficient of u1^(offset + stride*k) in g.u1 (target u1), or in g.u / u
    (target u). Plain actions use offset 0 and stride 1; the Witt subgroup tables are strided by p+1.

    Attributes:
        series: the table as an integral series, known modulo p^p_exp
        method: the computation that produced it
        target: u1 or u
        p_exp: M, the p-adic precision of the coefficients
        u1_exp: W, the u1-adic truncation of the action
        offset: u1-degree of entry 0
        stride: u1-degree step between entries
        worst_denominator: largest denominator exponent met on the way
        lowest_precision: smallest precision among the finished coefficients, before reduction to p^M
    """
    series: ScaledSeries
    method: Method
    target: Target
    p_exp: int
    u1_exp: int
    offset: int = 0
    stride: int = 1
    worst_denominator: int = 0
    lowest_precision: Optional[int] = None

    @classmethod
    def from_coefficients(cls, coefficients: List[WittElem], method: Method, target: Target, u1_exp: int,
                          **metadata) -> ActionResult:
        series = ScaledSeries.from_integral(coefficients)
        return cls(series, method, target, series.params.N, u1_exp, **metadata)

    @property
    def params(self) -> WittParams:
        return self.series.params

    def __len__(self):
        return self.series.wmax

    def coefficient(self, k: int) -> WittElem:
        """Table entry k, zero past the end of the table"""
        if k >= self.series.wmax:
            return WittElem.zero(self.params)
        return self.series.coeffs[k]

    def coefficients(self) -> List[WittElem]:
        return list(self.series.coeffs)

    def degree(self, k: int) -> int:
        return self.offset + self.stride * k

    def at_degree(self, n: int) -> WittElem:
        """The coefficient of u1^n"""
        k, r = divmod(n - self.offset, self.stride)
        if n < self.offset or r:
            return WittElem.zero(self.params)
        return self.coefficient(k)

    def by_degree(self) -> Dict[int, WittElem]:
        """Nonzero coefficients keyed by their u1-degree"""
        return {self.degree(k): c for k, c in enumerate(self.series.coeffs) if any(c.coeffs)}

    def as_u1_series(self) -> ScaledSeries:
        """The dense series in u1, truncated below u1^W"""
        zero = WittElem.zero(self.params)
        dense = [zero] * self.u1_exp
        for n, c in self.by_degree().items():
            if n < self.u1_exp:
                dense[n] = c
        return ScaledSeries.from_integral(dense)
