from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Union

from witt import ScaledWitt, WittElem, WittParams
from .errors import CompositionError, SeriesMismatchError

Scalar = Union[int, WittElem, ScaledWitt]


class ScaledSeries:
    """
    A power series in u1 truncated below degree wmax, with coefficient n equal to coeffs[n] / p^denom_exp.

    Every coefficient value is known modulo p^prec; prec never exceeds N - denom_exp.
    Arithmetic never divides numerators by p, except to strip a factor common to all of them (normalize).

    Attributes:
        coeffs: integral numerators, one per degree below wmax
        denom_exp: the global denominator exponent B
        prec: absolute precision of the coefficient values
        params: the Witt ring of the coefficients
    """
    __slots__ = ('coeffs', 'denom_exp', 'prec', 'params')

    def __init__(self, coeffs: Sequence[WittElem], denom_exp: int = 0, prec: Optional[int] = None,
                 params: Optional[WittParams] = None):
        if not coeffs:
            raise SeriesMismatchError('a truncated series needs wmax >= 1')
        self.coeffs: List[WittElem] = list(coeffs)
        self.params: WittParams = params if params is not None else self.coeffs[0].params
        self.denom_exp = denom_exp
        capacity = self.params.N - denom_exp
        self.prec = capacity if prec is None else min(prec, capacity)

    @property
    def wmax(self) -> int:
        return len(self.coeffs)

    @classmethod
    def zero(cls, params: WittParams, wmax: int) -> ScaledSeries:
        return cls([WittElem.zero(params)] * wmax, params=params)

    @classmethod
    def monomial(cls, params: WittParams, wmax: int, degree: int, coeff: Scalar = 1) -> ScaledSeries:
        """coeff * u1^degree, zero when the degree is truncated away"""
        value = ScaledWitt.of(coeff, params)
        nums = [WittElem.zero(params)] * wmax
        if degree < wmax:
            nums[degree] = value.num
        return cls(nums, value.exp, value.prec, params)

    @classmethod
    def one(cls, params: WittParams, wmax: int) -> ScaledSeries:
        return cls.monomial(params, wmax, 0)

    @classmethod
    def variable(cls, params: WittParams, wmax: int) -> ScaledSeries:
        """u1"""
        return cls.monomial(params, wmax, 1)

    @classmethod
    def from_scaled(cls, values: Sequence[ScaledWitt]) -> ScaledSeries:
        """Collect per-degree values under their common denominator"""
        params = values[0].params
        B = max(v.exp for v in values)
        nums = [v.num.times_p(B - v.exp) for v in values]
        return cls(nums, B, min(v.prec for v in values), params).normalize()

    @classmethod
    def from_integral(cls, values: Sequence[WittElem], prec: Optional[int] = None) -> ScaledSeries:
        return cls(values, 0, prec)

    def coefficient(self, n: int) -> ScaledWitt:
        if n >= self.wmax:
            return ScaledWitt(WittElem.zero(self.params), 0, self.prec)
        return ScaledWitt(self.coeffs[n], self.denom_exp, self.prec)

    def scaled_coefficients(self) -> List[ScaledWitt]:
        return [self.coefficient(n) for n in range(self.wmax)]

    def _check(self, other: ScaledSeries):
        if other.params != self.params:
            raise SeriesMismatchError(f'{self.params} and {other.params} differ')
        if other.wmax != self.wmax:
            raise SeriesMismatchError(f'truncations {self.wmax} and {other.wmax} differ')

    def valuation_bound(self) -> Union[int, float]:
        """Lower bound of the coefficient valuations"""
        best = math.inf
        for c in self.coeffs:
            if any(c.coeffs):
                best = min(best, c.valuation() - self.denom_exp)
        return min(best, self.prec)

    def normalize(self) -> ScaledSeries:
        """Strip the largest power of p common to B and every numerator"""
        if self.denom_exp == 0:
            return self
        k = self.denom_exp
        for c in self.coeffs:
            if any(c.coeffs):
                k = min(k, c.valuation())
                if k == 0:
                    return self
        if k == self.denom_exp and not any(any(c.coeffs) for c in self.coeffs):
            return ScaledSeries(self.coeffs, 0, self.prec, self.params)
        return ScaledSeries([c.divide_by_p(k) for c in self.coeffs], self.denom_exp - k, self.prec, self.params)

    def __add__(self, other: ScaledSeries) -> ScaledSeries:
        self._check(other)
        e = max(self.denom_exp, other.denom_exp)
        ka, kb = e - self.denom_exp, e - other.denom_exp
        nums = [a.times_p(ka) + b.times_p(kb) for a, b in zip(self.coeffs, other.coeffs)]
        return ScaledSeries(nums, e, min(self.prec, other.prec), self.params).normalize()

    def __neg__(self) -> ScaledSeries:
        return ScaledSeries([-c for c in self.coeffs], self.denom_exp, self.prec, self.params)

    def __sub__(self, other: ScaledSeries) -> ScaledSeries:
        return self + (-other)

    def __mul__(self, other) -> ScaledSeries:
        if isinstance(other, (int, WittElem, ScaledWitt)):
            return self.scale(other)
        if not isinstance(other, ScaledSeries):
            return NotImplemented
        self._check(other)
        params = self.params
        wmax = self.wmax
        width = 2 * params.d - 1
        rows = [[0] * width for _ in range(wmax)]
        right = [(j, c.coeffs) for j, c in enumerate(other.coeffs) if any(c.coeffs)]
        for i, a in enumerate(self.coeffs):
            x = a.coeffs
            if not any(x):
                continue
            for j, y in right:
                if i + j >= wmax:
                    break
                row = rows[i + j]
                for ii, xv in enumerate(x):
                    if xv:
                        for jj, yv in enumerate(y):
                            row[ii + jj] += xv * yv
        nums = [WittElem._raw(params.reduce(row), params) for row in rows]
        prec = min(self.prec + other.valuation_bound(), other.prec + self.valuation_bound())
        return ScaledSeries(nums, self.denom_exp + other.denom_exp, prec, params).normalize()

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> ScaledSeries:
        c = ScaledWitt.of(c, self.params)
        prec = min(self.prec + c.valuation_bound(), c.prec + self.valuation_bound())
        return ScaledSeries([a * c.num for a in self.coeffs], self.denom_exp + c.exp, prec, self.params).normalize()

    def frobenius(self) -> ScaledSeries:
        return ScaledSeries([c.frobenius() for c in self.coeffs], self.denom_exp, self.prec, self.params)

    def shift(self, k: int) -> ScaledSeries:
        """Multiply by u1^k"""
        zero = WittElem.zero(self.params)
        nums = ([zero] * k + self.coeffs)[:self.wmax]
        return ScaledSeries(nums, self.denom_exp, self.prec, self.params)

    def divide_by_pi(self, k: int = 1) -> ScaledSeries:
        return ScaledSeries(self.coeffs, self.denom_exp + k, self.prec - k, self.params)

    def times_pi(self, k: int = 1) -> ScaledSeries:
        if self.denom_exp >= k:
            return ScaledSeries(self.coeffs, self.denom_exp - k, self.prec + k, self.params)
        nums = [c.times_p(k - self.denom_exp) for c in self.coeffs]
        return ScaledSeries(nums, 0, self.prec + k, self.params)

    def truncate(self, wmax: int) -> ScaledSeries:
        nums = self.coeffs[:wmax] + [WittElem.zero(self.params)] * max(0, wmax - self.wmax)
        return ScaledSeries(nums, self.denom_exp, self.prec, self.params)

    def lift(self, params: WittParams) -> ScaledSeries:
        """Read exact numerators at another precision of the same ring"""
        return ScaledSeries([c.lift(params) for c in self.coeffs], self.denom_exp, None, params)

    def is_integral(self) -> bool:
        return all(c.is_integral() for c in self.scaled_coefficients())

    def __eq__(self, other):
        if not isinstance(other, ScaledSeries):
            return NotImplemented
        if other.wmax != self.wmax or other.params != self.params:
            return False
        return all(c.is_zero() for c in (self - other).scaled_coefficients())

    __hash__ = None

    def __repr__(self):
        terms = [f'({c})*u^{n}' for n, c in enumerate(self.coeffs) if any(c.coeffs)]
        body = ' + '.join(terms) if terms else '0'
        return f'ScaledSeries([{body}] / p^{self.denom_exp}, wmax={self.wmax}, prec={self.prec})'


def compose(outer: ScaledSeries, inner: ScaledSeries) -> ScaledSeries:
    """outer(inner(u1)) truncated to wmax, by Horner's rule"""
    outer._check(inner)
    if not inner.coefficient(0).is_zero():
        raise CompositionError('the inner series of a composition must have zero constant term')
    result = ScaledSeries.zero(outer.params, outer.wmax)
    for n in range(outer.wmax - 1, -1, -1):
        result = result * inner + ScaledSeries.monomial(outer.params, outer.wmax, 0, outer.coefficient(n))
    return result


def invert_unit(s: ScaledSeries) -> ScaledSeries:
    """
    1/s degree by degree.
    :raises NonUnitError: the constant term is not a unit
    """
    c = s.scaled_coefficients()
    inverse0 = c[0].inverse()
    out = [inverse0]
    nonzero = [k for k in range(1, s.wmax) if not c[k].is_zero()]
    for n in range(1, s.wmax):
        acc = ScaledWitt.zero(s.params)
        for k in nonzero:
            if k > n:
                break
            acc = acc + c[k] * out[n - k]
        out.append(-(inverse0 * acc))
    return ScaledSeries.from_scaled(out)


@dataclass(frozen=True)
class Series2x2:
    """A 2x2 matrix of truncated series [[a, b], [c, d]]"""
    a: ScaledSeries
    b: ScaledSeries
    c: ScaledSeries
    d: ScaledSeries

    def __matmul__(self, other: Series2x2) -> Series2x2:
        return Series2x2(self.a * other.a + self.b * other.c, self.a * other.b + self.b * other.d,
                         self.c * other.a + self.d * other.c, self.c * other.b + self.d * other.d)

    def act_on(self, x: ScaledSeries):
        """The fractional-linear image (a x + b) / (c x + d), as a numerator and denominator pair"""
        return self.a * x + self.b, self.c * x + self.d
