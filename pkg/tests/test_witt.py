import math

import pytest

from utils.random_elements import RandomElements
from witt import (WittElem, ScaledWitt, CONWAY_POLYNOMIALS, make_params, residue_polynomial, parse_elem, format_elem,
                  InvalidParamsError, NonUnitError, ExpressionSyntaxError, ParamsMismatchError, NotDivisibleError)


def test_conway_modulus_p2():
    """modulus reduces to x^2 + x + 1 and its root is a cube root of unity"""
    params = make_params(2, 1, 8)
    assert params.residue_modulus == (1, 1, 1)
    assert [c % 2 for c in params.modulus] == [1, 1, 1]
    t = WittElem.generator(params)
    assert t ** 3 == 1
    assert t != 1


def test_teichmuller_order_p3():
    """z has order 8 at p=3"""
    params = make_params(3, 1, 8)
    t = WittElem.generator(params)
    assert t ** 8 == 1
    assert t ** 4 == -1


def test_teichmuller_order_p5():
    params = make_params(5, 1, 4)
    t = WittElem.generator(params)
    assert t ** 24 == 1
    assert all(t ** (24 // r) != 1 for r in (2, 3))


def test_teichmuller_order_even_residue_degree():
    """q = 4: t^15 = 1 with a tabulated Conway polynomial"""
    params = make_params(2, 2, 10)
    t = WittElem.generator(params)
    assert params.residue_modulus == (1, 1, 0, 0, 1)
    assert t ** 15 == 1
    assert t ** 5 != 1 and t ** 3 != 1


def test_untabulated_modulus_is_deterministic():
    """p = 11 falls back to the smallest primitive polynomial"""
    params = make_params(11, 1, 3)
    t = WittElem.generator(params)
    assert t ** 120 == 1
    assert t ** 60 != 1 and t ** 40 != 1 and t ** 24 != 1
    assert make_params(11, 1, 3) is params


def test_untabulated_modulus_skips_imprimitive():
    """x^2 + 1 is the smallest irreducible over F_11, but x only has order 4 modulo it"""
    assert (11, 2) not in CONWAY_POLYNOMIALS
    chosen = residue_polynomial(11, 2)
    assert chosen != (1, 0, 1) and chosen[-1] == 1 and len(chosen) == 3
    assert make_params(11, 1, 3).residue_modulus == chosen


@pytest.mark.parametrize('p, f, N', [(4, 1, 3), (2, 0, 3), (3, 1, 0)])
def test_invalid_params(p, f, N):
    with pytest.raises(InvalidParamsError):
        make_params(p, f, N)


def test_ring_axioms():
    """associativity, commutativity and distributivity on random triples"""
    rng = RandomElements(seed=11)
    for p, f in [(2, 1), (3, 1), (2, 2), (5, 1)]:
        params = make_params(p, f, 12)
        for _ in range(5):
            a, b, c = rng.witt(params), rng.witt(params), rng.witt(params)
            assert (a * b) * c == a * (b * c)
            assert a * b == b * a
            assert a * (b + c) == a * b + a * c
            assert a + 0 == a
            assert a - a == 0


def test_product_example_p2():
    """(1+2t)(1+2t^2) = 3 since t^2 = -1-t"""
    params = make_params(2, 1, 10)
    t = WittElem.generator(params)
    assert t * t == -1 - t
    assert (1 + 2 * t) * (1 + 2 * t * t) == 3
    assert (1 + 2 * t) * (-1 - 2 * t) == -((1 + 2 * t) ** 2)


def test_frobenius():
    params = make_params(2, 1, 10)
    t = WittElem.generator(params)
    assert t.frobenius() == t * t
    assert t.frobenius() == -1 - t
    assert WittElem.from_int(7, params).frobenius() == 7


def test_frobenius_is_involutive_homomorphism():
    rng = RandomElements(seed=5)
    for p, f in [(2, 1), (3, 1), (2, 2), (3, 2)]:
        params = make_params(p, f, 9)
        for _ in range(4):
            a, b = rng.witt(params), rng.witt(params)
            assert a.frobenius().frobenius() == a
            assert (a * b).frobenius() == a.frobenius() * b.frobenius()
            assert (a + b).frobenius() == a.frobenius() + b.frobenius()
            assert a.norm().frobenius() == a.norm()


def test_inverse():
    params = make_params(2, 1, 20)
    t = WittElem.generator(params)
    alpha = 1 + 2 * t
    assert WittElem.one(params).inv() == 1
    assert alpha.inv() * alpha == 1
    assert alpha.frobenius() * alpha.inv() == -1


def test_inverse_random_units():
    rng = RandomElements(seed=3)
    for p, f in [(3, 1), (5, 1), (2, 2)]:
        params = make_params(p, f, 15)
        a = rng.unit(params)
        assert (a * a.inv() - 1).valuation() == math.inf


def test_inverse_rejects_non_unit():
    params = make_params(3, 1, 5)
    with pytest.raises(NonUnitError):
        (3 * WittElem.generator(params)).inv()


def test_norm():
    params = make_params(2, 1, 10)
    t = WittElem.generator(params)
    assert WittElem.one(params).norm() == 1
    assert (1 + 2 * t).norm() == 3
    assert t.norm() == t ** 3


def test_valuation():
    params = make_params(2, 1, 10)
    t = WittElem.generator(params)
    assert WittElem.from_int(2, params).valuation() == 1
    assert (1 + 2 * t).valuation() == 0
    assert WittElem.zero(params).valuation() == math.inf
    assert (8 * t + 4).valuation() == 2


def test_params_mismatch():
    a = WittElem.one(make_params(2, 1, 5))
    b = WittElem.one(make_params(3, 1, 5))
    with pytest.raises(ParamsMismatchError):
        a + b


def test_parse_examples():
    params = make_params(2, 1, 10)
    t = WittElem.generator(params)
    assert parse_elem('0', params) == 0
    assert parse_elem('1+2*z', params) == 1 + 2 * t
    assert parse_elem('-(1 + z)^2', params) == -((1 + t) ** 2)
    assert parse_elem('2*-z', params) == -2 * t
    assert parse_elem('z^5', params) == t ** 5


def test_parse_square_root_of_minus_one():
    params = make_params(3, 1, 10)
    i = parse_elem('z^2', params)
    assert i * i == -1
    assert parse_elem('-4-3*z^2', params) == -4 - 3 * i


def test_parse_format_round_trip():
    rng = RandomElements(seed=17)
    params = make_params(3, 2, 6)
    for _ in range(5):
        a = rng.witt(params)
        assert parse_elem(format_elem(a), params) == a
    assert format_elem(WittElem.zero(params)) == '0'


@pytest.mark.parametrize('text', ['1+', 'x', '2**z', '(1+z', 'z2', ''])
def test_parse_syntax_errors(text):
    with pytest.raises(ExpressionSyntaxError):
        parse_elem(text, make_params(2, 1, 4))


def test_balanced_integer():
    params = make_params(2, 1, 8)
    assert WittElem.from_int(-1, params).balanced_integer() == -1
    assert WittElem.from_int(100, params).balanced_integer() == 100
    assert WittElem.generator(params).balanced_integer() is None


def test_scaled_arithmetic():
    """denominators and precision follow the value"""
    params = make_params(3, 1, 10)
    t = WittElem.generator(params)
    x = ScaledWitt(t).divide_by_pi(2)
    assert x.exp == 2 and x.prec == 8
    assert (x * 9).to_integral() == t
    y = x + ScaledWitt(t).divide_by_pi(1)
    assert y.exp == 2
    assert (y.times_pi(2)).to_integral() == t + 3 * t
    stripped = ScaledWitt(WittElem.from_int(9, params), 2)
    assert stripped.exp == 0 and stripped == 1
    # 9 / 3^2 is known modulo 3^8 only, stripping the 9 does not recover the top digits
    assert stripped.prec == 8


def test_scaled_inverse_and_integrality():
    params = make_params(3, 1, 10)
    t = WittElem.generator(params)
    u = ScaledWitt(1 + 3 * t)
    assert (u * u.inverse()) == 1
    with pytest.raises(NonUnitError):
        ScaledWitt(3 * t).inverse()
    with pytest.raises(NotDivisibleError):
        ScaledWitt(t).divide_by_pi().to_integral()
