import pytest

from series import (ScaledSeries, compose, invert_unit, f_series, f1_series, m_sequence, normalized_m_sequence,
                    ratio_sequence, matrix_partial_product, transfer_matrix, f_and_f1_from_m_sequence,
                    f_and_f1_from_matrices, w1_series, w1_matrix_series, series_to_records, series_from_records,
                    PrecisionMonitor, CompositionError, PrecisionBudgetExceeded)
from utils.random_elements import RandomElements
from witt import WittElem, ScaledWitt, make_params, NonUnitError


def _poly(params, wmax, terms):
    """sum of c * u^n / p^e over (n, c, e)"""
    total = ScaledSeries.zero(params, wmax)
    for n, c, e in terms:
        total = total + ScaledSeries.monomial(params, wmax, n, c).divide_by_pi(e)
    return total


def _random_series(rng, params, wmax, constant=True):
    coeffs = [rng.witt(params) for _ in range(wmax)]
    if not constant:
        coeffs[0] = WittElem.zero(params)
    return ScaledSeries(coeffs)


def test_basic_arithmetic():
    params = make_params(3, 1, 10)
    rng = RandomElements(seed=1)
    s = _random_series(rng, params, 8)
    u = ScaledSeries.variable(params, 8)
    assert s + ScaledSeries.zero(params, 8) == s
    assert s * ScaledSeries.one(params, 8) == s
    assert u * u == ScaledSeries.monomial(params, 8, 2)
    assert (u * u).shift(6) == ScaledSeries.zero(params, 8)


def test_ring_axioms():
    params = make_params(2, 1, 10)
    rng = RandomElements(seed=4)
    for _ in range(3):
        a, b, c = (_random_series(rng, params, 7) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        x, y = _random_series(rng, params, 7, False), _random_series(rng, params, 7, False)
        assert compose(compose(a, x), y) == compose(a, compose(x, y))


def test_compose_examples():
    params = make_params(5, 1, 8)
    rng = RandomElements(seed=6)
    s = _random_series(rng, params, 6)
    u = ScaledSeries.variable(params, 6)
    assert compose(s, u) == s
    inner = _random_series(rng, params, 6, constant=False)
    assert compose(u, inner) == inner
    expected = _poly(params, 6, [(2, 1, 0), (3, 2, 0), (4, 1, 0)])
    assert compose(u * u, u + u * u) == expected


def test_compose_rejects_constant_term():
    params = make_params(3, 1, 5)
    with pytest.raises(CompositionError):
        compose(ScaledSeries.variable(params, 4), ScaledSeries.one(params, 4))


def test_invert_unit():
    params = make_params(3, 1, 12)
    one = ScaledSeries.one(params, 10)
    u = ScaledSeries.variable(params, 10)
    assert invert_unit(one) == one
    assert invert_unit(one + u) * (one + u) == one
    f = f_series(3, params, 10)
    assert invert_unit(f) * f == one
    with pytest.raises(NonUnitError):
        invert_unit(u)


def test_f_and_f1_display_q2():
    """f and f1 modulo u1^(q^5) at q=2"""
    params = make_params(2, 1, 16)
    f = f_series(2, params, 32)
    f1 = f1_series(2, params, 32)
    assert f == _poly(params, 32, [(0, 1, 0), (3, 1, 1), (9, 1, 1), (12, 1, 1), (15, 1, 2)])
    assert f1 == _poly(params, 32, [(1, 1, 0), (4, 1, 0), (16, 1, 0), (7, 1, 1), (19, 1, 1), (25, 1, 1),
                                    (28, 1, 1), (31, 1, 2)])


def test_w1_display_q2():
    """w1 equals the displayed fraction, independently of the Lambda sums"""
    params = make_params(2, 1, 16)
    numerator = _poly(params, 32, [(31, 1, 2), (7, 1, 1), (19, 1, 1), (25, 1, 1), (28, 1, 1),
                                   (1, 1, 0), (4, 1, 0), (16, 1, 0)])
    denominator = _poly(params, 32, [(15, 1, 2), (3, 1, 1), (9, 1, 1), (12, 1, 1), (0, 1, 0)])
    expected = numerator * invert_unit(denominator)
    assert w1_series(2, params, 32) == expected
    assert w1_matrix_series(2, params, 32) == expected


def test_m_sequence_start():
    params = make_params(3, 1, 10)
    m = m_sequence(3, params, 5, 30)
    assert m[0] == ScaledSeries.one(params, 30)
    assert m[1] == ScaledSeries.variable(params, 30).divide_by_pi()
    # pi^2 m_4 agrees with f below u1^(q^3)
    assert normalized_m_sequence(3, params, 5, 27)[4] == f_series(3, params, 27)


@pytest.mark.parametrize('q, wmax', [(2, 32), (3, 200), (5, 200)])
def test_three_constructions_of_f(q, wmax):
    params = make_params(q, 1, 12)
    f, f1 = f_series(q, params, wmax), f1_series(q, params, wmax)
    assert f_and_f1_from_m_sequence(q, params, wmax) == (f, f1)
    assert f_and_f1_from_matrices(q, params, wmax) == (f, f1)


def test_even_residue_degree_constructions():
    params = make_params(2, 2, 10)
    f, f1 = f_series(4, params, 80), f1_series(4, params, 80)
    assert f_and_f1_from_matrices(4, params, 80) == (f, f1)


def test_partial_products():
    params = make_params(2, 1, 12)
    first = matrix_partial_product(2, params, 1, 40)
    assert first == transfer_matrix(2, params, 1, 40)
    for n in (1, 2, 3):
        product = matrix_partial_product(2, params, n, 40)
        assert product.d.coefficient(0) == 1
        u1 = ScaledSeries.variable(params, 40)
        truncation = 2 ** (2 * n)
        assert (product.a * u1 + product.b).truncate(truncation) == f1_series(2, params, truncation)
        assert (product.c * u1 + product.d).truncate(truncation) == f_series(2, params, truncation)


def test_ratio_sequence_converges_to_w1():
    params = make_params(2, 1, 20)
    wmax = 40
    ratios = ratio_sequence(2, params, 4, wmax)
    pairs = normalized_m_sequence(2, params, 8, wmax)
    for n in range(3):
        assert ratios[n] == pairs[2 * n + 1] * invert_unit(pairs[2 * n])
    assert ratios[3] == w1_series(2, params, wmax)


def test_records_round_trip():
    params = make_params(3, 1, 10)
    s = f1_series(3, params, 40) * invert_unit(f_series(3, params, 40))
    records = series_to_records(s)
    back = series_from_records(records, params, 40, s.prec)
    assert back == s
    assert series_to_records(back) == records
    assert records[0] == {'n': 1, 'denom_exp': 0, 'coeff': [1, 0]}


def test_precision_monitor():
    params = make_params(3, 1, 10)
    monitor = PrecisionMonitor(target=6, budget=3)
    t = WittElem.generator(params)
    monitor.finish(ScaledWitt(t, 0, 8))
    with pytest.raises(PrecisionBudgetExceeded):
        monitor.observe(ScaledWitt(t).divide_by_pi(4))
    with pytest.raises(PrecisionBudgetExceeded):
        monitor.finish(ScaledWitt(t, 0, 5))
    assert monitor.worst_denominator == 4
