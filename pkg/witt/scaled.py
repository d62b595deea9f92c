from __future__ import annotations

import math
from typing import Optional, Union

from .element import WittElem
from .errors import NonUnitError, NotDivisibleError
from .params import WittParams


class ScaledWitt:
    """
    A value num / p^exp of W(F_{q^2})[1/p], known modulo p^prec.

    The numerator is an integral WittElem at the ambient precision N, so a value with denominator p^exp
    can never be known beyond p^(N - exp). Common factors of p are stripped from num and exp after
    every operation. The capacity is fixed before stripping: the top digits of a stripped numerator are
    unknown.

    Attributes:
        num: integral numerator
        exp: nonnegative exponent of the p-power denominator
        prec: absolute precision of the value (may drop below zero when everything is lost)
    """
    __slots__ = ('num', 'exp', 'prec')

    def __init__(self, num: WittElem, exp: int = 0, prec: Optional[int] = None):
        if exp < 0:
            raise ValueError(f'denominator exponent must be nonnegative, got {exp}')
        capacity = num.params.N - exp
        if exp and any(num.coeffs):
            p = num.params.p
            coeffs = num.coeffs
            k = 0
            while k < exp and all(c % p == 0 for c in coeffs):
                coeffs = tuple(c // p for c in coeffs)
                k += 1
            if k:
                num = WittElem._raw(coeffs, num.params)
                exp -= k
        elif exp:
            exp = 0
        self.num = num
        self.exp = exp
        self.prec = capacity if prec is None else min(prec, capacity)

    @classmethod
    def of(cls, value: Union[int, WittElem, ScaledWitt], params: WittParams) -> ScaledWitt:
        """Exact embedding of integers and integral elements"""
        if isinstance(value, ScaledWitt):
            return value
        if isinstance(value, int):
            value = WittElem.from_int(value, params)
        return cls(value)

    @classmethod
    def zero(cls, params: WittParams) -> ScaledWitt:
        return cls(WittElem.zero(params))

    @property
    def params(self) -> WittParams:
        return self.num.params

    def valuation(self) -> Union[int, float]:
        v = self.num.valuation()
        return v if v == math.inf else v - self.exp

    def valuation_bound(self) -> Union[int, float]:
        """A lower bound for the valuation of the true value"""
        return min(self.valuation(), self.prec)

    def is_zero(self) -> bool:
        """Zero to the known precision"""
        return self.valuation() >= self.prec

    def is_integral(self) -> bool:
        return self.exp == 0 or self.is_zero()

    def _wrap(self, other) -> Optional[ScaledWitt]:
        if isinstance(other, ScaledWitt):
            return other
        if isinstance(other, (int, WittElem)):
            return ScaledWitt.of(other, self.params)
        return None

    def __add__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        e = max(self.exp, other.exp)
        num = self.num.times_p(e - self.exp) + other.num.times_p(e - other.exp)
        return ScaledWitt(num, e, min(self.prec, other.prec))

    __radd__ = __add__

    def __neg__(self):
        return ScaledWitt(-self.num, self.exp, self.prec)

    def __sub__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        prec = min(self.prec + other.valuation_bound(), other.prec + self.valuation_bound())
        return ScaledWitt(self.num * other.num, self.exp + other.exp, prec)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = ScaledWitt.of(1, self.params)
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def frobenius(self) -> ScaledWitt:
        return ScaledWitt(self.num.frobenius(), self.exp, self.prec)

    def divide_by_pi(self, k: int = 1) -> ScaledWitt:
        return ScaledWitt(self.num, self.exp + k, self.prec - k)

    def times_pi(self, k: int = 1) -> ScaledWitt:
        if self.exp >= k:
            return ScaledWitt(self.num, self.exp - k, self.prec + k)
        return ScaledWitt(self.num.times_p(k - self.exp), 0, self.prec + k)

    def inverse(self) -> ScaledWitt:
        """Inverse of a unit value, known to the same precision"""
        if self.exp or not self.num.is_unit():
            raise NonUnitError(f'{self!r} is not a unit')
        return ScaledWitt(self.num.inv(), 0, self.prec)

    def to_integral(self) -> WittElem:
        """The value as an integral element; raises if it carries a denominator"""
        if self.is_zero():
            return WittElem.zero(self.params)
        if self.exp:
            raise NotDivisibleError(f'{self!r} has valuation {self.valuation()} < 0')
        return self.num

    def __repr__(self):
        return f'ScaledWitt({self.num}, exp={self.exp}, prec={self.prec})'
