from __future__ import annotations

import logging
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from sympy import Poly, Symbol, factorint, isprime

from .errors import InvalidParamsError

logger = logging.getLogger(__name__)

Coeffs = Tuple[int, ...]

# Conway polynomials of F_{p^d}, coefficients listed from x^0 up to the leading 1.
CONWAY_POLYNOMIALS: Dict[Tuple[int, int], Coeffs] = {
    (2, 2): (1, 1, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (5, 2): (2, 4, 1),
    (5, 4): (2, 4, 4, 0, 1),
    (7, 2): (3, 6, 1),
    (7, 4): (3, 4, 5, 0, 1),
}


def _reduce(full: Sequence[int], modulus: Coeffs, m: int) -> Coeffs:
    """Reduce a polynomial (low to high) modulo a monic modulus and modulo the integer m"""
    d = len(modulus) - 1
    work = list(full)
    if len(work) < d:
        work.extend([0] * (d - len(work)))
    for k in range(len(work) - 1, d - 1, -1):
        c = work[k] % m
        if c:
            base = k - d
            for i in range(d):
                work[base + i] -= c * modulus[i]
    return tuple(x % m for x in work[:d])


def _mul(a: Coeffs, b: Coeffs, modulus: Coeffs, m: int) -> Coeffs:
    full = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                full[i + j] += x * y
    return _reduce(full, modulus, m)


def _pow(a: Coeffs, e: int, modulus: Coeffs, m: int) -> Coeffs:
    d = len(modulus) - 1
    result: Coeffs = (1,) + (0,) * (d - 1)
    base = a
    while e:
        if e & 1:
            result = _mul(result, base, modulus, m)
        e >>= 1
        if e:
            base = _mul(base, base, modulus, m)
    return result


def _is_primitive(coeffs: Coeffs, p: int) -> bool:
    """Whether the monic polynomial (low to high) is irreducible over F_p with x generating the unit group"""
    if coeffs[0] % p == 0:
        return False
    x = Symbol('x')
    if not Poly(list(reversed(coeffs)), x, modulus=p).is_irreducible:
        return False
    d = len(coeffs) - 1
    order = p ** d - 1
    generator = (0, 1) + (0,) * (d - 2)
    one = (1,) + (0,) * (d - 1)
    return all(_pow(generator, order // r, coeffs, p) != one for r in factorint(order))


def residue_polynomial(p: int, d: int) -> Coeffs:
    """
    The defining polynomial of F_{p^d} over F_p: the Conway polynomial when tabulated, else the smallest
    primitive polynomial, ordering candidates by the integer whose base-p digits are c_{d-1}, ..., c_0.

    The fallback skips irreducible polynomials that are not primitive, so it is not the smallest irreducible
    one. The root z must generate F_{p^d}^x: its Teichmuller lift is then a primitive (p^d - 1)st root of unity.
    """
    if (p, d) in CONWAY_POLYNOMIALS:
        return CONWAY_POLYNOMIALS[(p, d)]
    for k in range(p ** d):
        digits = []
        for _ in range(d):
            k, r = divmod(k, p)
            digits.append(r)
        candidate = tuple(digits) + (1,)
        if _is_primitive(candidate, p):
            return candidate
    raise InvalidParamsError(f'no primitive polynomial of degree {d} over F_{p}')  # unreachable for prime p


def _teichmuller_modulus(p: int, q: int, d: int, N: int, residue: Coeffs) -> Coeffs:
    """
    Lift the residue polynomial to the minimal polynomial, over Z/p^N, of the Teichmuller lift of its root.
    The root is the fixed point of x -> x^{q^2} in (Z/p^N)[x]/(residue); the modulus is the product of its
    conjugates under x -> x^p.
    """
    pn = p ** N
    root: Coeffs = (0, 1) + (0,) * (d - 2)
    for _ in range(N + 1):
        lifted = _pow(root, q * q, residue, pn)
        if lifted == root:
            break
        root = lifted
    else:
        raise RuntimeError(f'Teichmuller iteration did not settle for p={p}, d={d}, N={N}')

    conjugates: List[Coeffs] = [root]
    for _ in range(d - 1):
        conjugates.append(_pow(conjugates[-1], p, residue, pn))

    zero: Coeffs = (0,) * d
    product: List[Coeffs] = [(1,) + (0,) * (d - 1)]
    for c in conjugates:
        shifted = [zero] + product
        scaled = [_mul(c, coeff, residue, pn) for coeff in product] + [zero]
        product = [tuple((x - y) % pn for x, y in zip(a, b)) for a, b in zip(shifted, scaled)]

    if any(any(coeff[1:]) for coeff in product):
        raise RuntimeError(f'conjugate product is not defined over Z/p^N for p={p}, d={d}')
    return tuple(coeff[0] for coeff in product)


class WittParams:
    """
    The ring W(F_{q^2}) modulo p^N, q = p^f, presented as (Z/p^N)[t]/(modulus) where t is a Teichmuller
    generator: t^{q^2 - 1} = 1 and its residue generates F_{q^2}^x.

    Instances are immutable and shared: build them with make_params.

    Attributes:
        p: the prime
        f: residue degree, q = p^f
        N: absolute precision, elements are known modulo p^N
        q: p^f
        d: 2f, the rank over Z_p
        pn: p^N
        modulus: monic degree d polynomial over Z/p^N, low to high, whose root is t
        residue_modulus: the reduction of modulus mod p (a Conway or primitive polynomial)
        sigma_rows: t^{q*i} for i < d, the substitution table of the Frobenius lift
    """
    __slots__ = ('p', 'f', 'N', 'q', 'd', 'pn', 'modulus', 'residue_modulus', 'sigma_rows')

    def __init__(self, p: int, f: int, N: int, modulus: Coeffs, residue_modulus: Coeffs):
        self.p = p
        self.f = f
        self.N = N
        self.q = p ** f
        self.d = 2 * f
        self.pn = p ** N
        self.modulus = modulus
        self.residue_modulus = residue_modulus
        t: Coeffs = (0, 1) + (0,) * (self.d - 2)
        t_q = _pow(t, self.q, modulus, self.pn)
        rows = [(1,) + (0,) * (self.d - 1)]
        for _ in range(self.d - 1):
            rows.append(_mul(rows[-1], t_q, modulus, self.pn))
        self.sigma_rows: Tuple[Coeffs, ...] = tuple(rows)

    def reduce(self, full: Sequence[int]) -> Coeffs:
        return _reduce(full, self.modulus, self.pn)

    def mul(self, a: Coeffs, b: Coeffs) -> Coeffs:
        return _mul(a, b, self.modulus, self.pn)

    def dot(self, pairs) -> Coeffs:
        """Sum of products a_i * b_i over raw coordinate tuples, reduced once at the end"""
        d = self.d
        full = [0] * (2 * d - 1)
        for a, b in pairs:
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        full[i + j] += x * y
        return self.reduce(full)

    def frobenius(self, a: Coeffs) -> Coeffs:
        out = [0] * self.d
        for c, row in zip(a, self.sigma_rows):
            if c:
                for i, r in enumerate(row):
                    out[i] += c * r
        return tuple(x % self.pn for x in out)

    def with_precision(self, N: int) -> WittParams:
        return make_params(self.p, self.f, N)

    def compatible(self, other: WittParams) -> bool:
        """Same field, possibly at another precision"""
        return self.p == other.p and self.f == other.f

    def __eq__(self, other):
        if not isinstance(other, WittParams):
            return NotImplemented
        return (self.p, self.f, self.N) == (other.p, other.f, other.N)

    def __hash__(self):
        return hash((self.p, self.f, self.N))

    def __repr__(self):
        return f'WittParams(p={self.p}, f={self.f}, N={self.N})'


@lru_cache(maxsize=None)
def make_params(p: int, f: int, N: int) -> WittParams:
    """
    Build the parameters of W(F_{q^2}) mod p^N with its deterministic Teichmuller modulus.
    :param p: a prime
    :param f: residue degree, q = p^f
    :param N: absolute precision
    :return: shared WittParams
    """
    if not isinstance(p, int) or not isprime(p):
        raise InvalidParamsError(f'p must be prime, got {p!r}')
    if not isinstance(f, int) or f < 1:
        raise InvalidParamsError(f'residue degree f must be a positive integer, got {f!r}')
    if not isinstance(N, int) or N < 1:
        raise InvalidParamsError(f'precision N must be a positive integer, got {N!r}')
    d = 2 * f
    residue = residue_polynomial(p, d)
    if not _is_primitive(residue, p):
        raise InvalidParamsError(f'tabulated polynomial {residue} is not primitive over F_{p}')
    modulus = _teichmuller_modulus(p, p ** f, d, N, residue)
    logger.debug('W(F_%d^%d) mod %d^%d uses modulus %s', p, d, p, N, modulus)
    return WittParams(p, f, N, modulus, residue)
