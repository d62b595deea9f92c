from __future__ import annotations

import math
from typing import Iterable, Optional, Sequence, Tuple, Union

from .errors import NonUnitError, NotDivisibleError, ParamsMismatchError
from .params import WittParams

IntLike = Union[int, 'WittElem']


class WittElem:
    """
    An element of W(F_{q^2}) modulo p^N, stored by its coordinates in the basis 1, t, ..., t^{d-1}
    of the Teichmuller generator t. Immutable value type.

    Attributes:
        coeffs: d residues in [0, p^N)
        params: the ring this element lives in
    """
    __slots__ = ('coeffs', 'params')

    def __init__(self, coeffs: Sequence[int], params: WittParams):
        if len(coeffs) == params.d:
            pn = params.pn
            coeffs = tuple(c % pn for c in coeffs)
        else:
            coeffs = params.reduce(coeffs)
        object.__setattr__(self, 'coeffs', coeffs)
        object.__setattr__(self, 'params', params)

    def __setattr__(self, key, value):
        raise AttributeError('WittElem is immutable')

    @classmethod
    def _raw(cls, coeffs: Tuple[int, ...], params: WittParams) -> WittElem:
        """Wrap already reduced coordinates"""
        obj = cls.__new__(cls)
        object.__setattr__(obj, 'coeffs', coeffs)
        object.__setattr__(obj, 'params', params)
        return obj

    @classmethod
    def zero(cls, params: WittParams) -> WittElem:
        return cls._raw((0,) * params.d, params)

    @classmethod
    def one(cls, params: WittParams) -> WittElem:
        return cls.from_int(1, params)

    @classmethod
    def from_int(cls, n: int, params: WittParams) -> WittElem:
        return cls._raw((n % params.pn,) + (0,) * (params.d - 1), params)

    @classmethod
    def generator(cls, params: WittParams) -> WittElem:
        """The Teichmuller generator t"""
        return cls._raw((0, 1) + (0,) * (params.d - 2), params)

    @classmethod
    def dot(cls, pairs: Iterable[Tuple[WittElem, WittElem]], params: WittParams) -> WittElem:
        """sum(a * b) with a single reduction"""
        return cls._raw(params.dot((a.coeffs, b.coeffs) for a, b in pairs), params)

    def _coerce(self, other) -> Optional[WittElem]:
        if isinstance(other, WittElem):
            if other.params is not self.params and other.params != self.params:
                raise ParamsMismatchError(f'{self.params} and {other.params} differ')
            return other
        if isinstance(other, int):
            return WittElem.from_int(other, self.params)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        pn = self.params.pn
        return WittElem._raw(tuple((a + b) % pn for a, b in zip(self.coeffs, other.coeffs)), self.params)

    __radd__ = __add__

    def __neg__(self):
        pn = self.params.pn
        return WittElem._raw(tuple(-a % pn for a in self.coeffs), self.params)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        pn = self.params.pn
        return WittElem._raw(tuple((a - b) % pn for a, b in zip(self.coeffs, other.coeffs)), self.params)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, int):
            pn = self.params.pn
            return WittElem._raw(tuple(a * other % pn for a in self.coeffs), self.params)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return WittElem._raw(self.params.mul(self.coeffs, other.coeffs), self.params)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        result = WittElem.one(self.params)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = WittElem.from_int(other, self.params)
        if not isinstance(other, WittElem):
            return NotImplemented
        return self.params == other.params and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.params))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f'WittElem({format_elem(self)!r}, p={self.params.p}, f={self.params.f}, N={self.params.N})'

    def __str__(self):
        return format_elem(self)

    def frobenius(self) -> WittElem:
        """sigma, the lift of x -> x^q: t -> t^q, identity on Z/p^N"""
        return WittElem._raw(self.params.frobenius(self.coeffs), self.params)

    def norm(self) -> WittElem:
        return self * self.frobenius()

    def is_unit(self) -> bool:
        p = self.params.p
        return any(c % p for c in self.coeffs)

    def inv(self) -> WittElem:
        """Inverse of a unit: the residue inverse a^{p^d - 2} refined by Newton steps x <- x(2 - ax)"""
        if not self.is_unit():
            raise NonUnitError(f'{self} is not a unit modulo {self.params.p}')
        params = self.params
        x = self ** (params.p ** params.d - 2)
        for _ in range(max(1, math.ceil(math.log2(params.N)))):
            x = x * (2 - self * x)
        return x

    def valuation(self) -> Union[int, float]:
        """Largest e with p^e dividing every coordinate, +inf for zero"""
        if not any(self.coeffs):
            return math.inf
        p = self.params.p
        e = 0
        coeffs = self.coeffs
        while all(c % p == 0 for c in coeffs):
            coeffs = tuple(c // p for c in coeffs)
            e += 1
        return e

    def divide_by_p(self, k: int = 1) -> WittElem:
        """Exact division by p^k; the result is known modulo p^(N-k)"""
        if k == 0:
            return self
        pk = self.params.p ** k
        if any(c % pk for c in self.coeffs):
            raise NotDivisibleError(f'{self} is not divisible by {self.params.p}^{k}')
        return WittElem._raw(tuple(c // pk for c in self.coeffs), self.params)

    def times_p(self, k: int = 1) -> WittElem:
        if k == 0:
            return self
        return self * (self.params.p ** k)

    def lift(self, params: WittParams) -> WittElem:
        """
        The same coordinates read at another precision: reduced when lowering N, zero-padded when raising it.
        A lift is not the element an expression denotes at the higher precision, z^2 having other coordinates there.
        """
        if not self.params.compatible(params):
            raise ParamsMismatchError(f'cannot move {self.params} to {params}')
        return WittElem(self.coeffs, params)

    def in_prime_subring(self) -> bool:
        return not any(self.coeffs[1:])

    def balanced_integer(self) -> Optional[int]:
        """The representative in (-p^N/2, p^N/2] when the element lies in Z/p^N, else None"""
        if not self.in_prime_subring():
            return None
        c = self.coeffs[0]
        pn = self.params.pn
        return c if 2 * c <= pn else c - pn


def format_elem(a: WittElem) -> str:
    """Canonical text form c0 + c1*z + c2*z^2 + ..., zero terms omitted"""
    terms = []
    for i, c in enumerate(a.coeffs):
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append(f'{c}*z')
        else:
            terms.append(f'{c}*z^{i}')
    return ' + '.join(terms) if terms else '0'
