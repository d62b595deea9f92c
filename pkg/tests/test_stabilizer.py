import pytest

from ltaction.golden import load_golden
from series import (ScaledSeries, PrecisionBudgetExceeded, compose, f_series, f1_series, invert_unit)
from stabilizer import (GroupElem, ActionDriver, act_u1, act_u1_recursive, act_u1_trees, act_u1_functional, act_u,
                        witt_act_u1, witt_act_u, witt_act_u1_recursion, degree_support_check, closed_gamma,
                        low_degree_closed, low_degree_u_closed, act_on_ring_element, classify_linear,
                        composition_convention, PowerTable, truncated_powers, Method, Target,
                        ResidueDegreeError, ResidueDegreeParityError, UnknownMethodError, IntegralityError)
from trees import enumerate_trees, summed_index
from utils.random_elements import RandomElements
from witt import ScaledWitt, WittElem, make_params, InvalidParamsError, NonUnitError

METHODS = ['recursive', 'trees', 'functional']


def _elements(p, f, M, count, seed, witt_only=False):
    params = make_params(p, f, M)
    rng = RandomElements(seed=seed)
    return [rng.group_element(params, witt_only) for _ in range(count)]


def _units(p, M, count, seed):
    params = make_params(p, 1, M)
    rng = RandomElements(seed=seed)
    return [rng.unit(params) for _ in range(count)]


def _beta(alpha):
    return alpha.frobenius() * alpha.inv()


def test_group_mul():
    params = make_params(3, 1, 10)
    rng = RandomElements(seed=1)
    g, h, k = (rng.group_element(params) for _ in range(3))
    one = GroupElem.identity(params)
    assert g * one == g and one * g == g
    a, b = rng.unit(params), rng.unit(params)
    assert GroupElem.witt(a) * GroupElem.witt(b) == GroupElem.witt(a * b)
    S = GroupElem.uniformizer(params)
    assert S * S == GroupElem.order_element(WittElem.from_int(3, params), WittElem.zero(params))
    assert (g * h) * k == g * (h * k)
    w = rng.unit(params)
    assert S * GroupElem.witt(w) == GroupElem.order_element(WittElem.zero(params), w.frobenius())


def test_group_element_needs_unit():
    params = make_params(3, 1, 6)
    with pytest.raises(NonUnitError):
        GroupElem(WittElem.from_int(3, params), WittElem.one(params))


@pytest.mark.parametrize('p, f', [(2, 1), (3, 1), (5, 1), (2, 2)])
def test_closed_low_degree_gammas(p, f):
    """gamma_1..gamma_4 from the worked formulas, against all three methods"""
    for g in _elements(p, f, 20, 10, seed=p + 10 * f):
        closed = closed_gamma(g)
        assert closed[1] == g.alpha0.frobenius() * g.alpha0.inv()
        for method in METHODS:
            result = act_u1(g, 5, method)
            assert result.coefficient(0) == 0
            assert [result.coefficient(n) for n in range(1, 5)] == [closed[n] for n in range(1, 5)]


@pytest.mark.parametrize('p, f', [(2, 1), (3, 1), (2, 2), (5, 1)])
def test_three_methods_agree(p, f):
    for g in _elements(p, f, 20, 5, seed=7 * p + f):
        recursive = act_u1_recursive(g, 40)
        trees = act_u1_trees(g, 40)
        functional = act_u1_functional(g, 40)
        assert recursive.coefficients() == trees.coefficients() == functional.coefficients()
        assert min(recursive.lowest_precision, trees.lowest_precision) >= 20
        assert (recursive.method, trees.method, functional.method) == (Method.RECURSIVE, Method.TREES,
                                                                       Method.FUNCTIONAL)


@pytest.mark.parametrize('q, top', [(2, 7), (3, 6)])
def test_tree_sums_match_enumeration(q, top):
    for g in _elements(q, 1, 24, 5, seed=q):
        result = act_u1_trees(g, top + 1)
        for n in range(1, top + 1):
            assert summed_index(enumerate_trees(q, n), g.alpha0, g.alpha1) == result.coefficient(n)


def test_published_series_p2():
    golden = load_golden('paper_p2')
    result = act_u1(golden.group_element(), golden.u1_exp, precision=golden.params.N)
    for n in range(golden.u1_exp):
        assert result.coefficient(n) == golden.expected(n)
    assert result.coefficient(70).balanced_integer() == 57330724580351
    assert result.coefficient(46).balanced_integer() == -248695951
    assert result.lowest_precision >= golden.params.N


def test_published_series_p3():
    golden = load_golden('paper_p3')
    g = golden.group_element()
    result = act_u1(g, golden.u1_exp, precision=golden.params.N)
    for n in range(golden.u1_exp):
        assert result.coefficient(n) == golden.expected(n)
    alternating = witt_act_u1(g.alpha0, golden.u1_exp, precision=golden.params.N)
    assert alternating.by_degree() == result.by_degree()
    recursive = act_u1_recursive(g, golden.u1_exp, precision=golden.params.N)
    assert recursive.coefficients() == result.coefficients()


@pytest.mark.parametrize('p', [2, 3])
def test_output_precision(p):
    """an element known beyond p^M is acted on at its own digits and reported modulo p^M"""
    low = make_params(p, 1, 20)
    for g in _elements(p, 1, 40, 3, seed=80 + p):
        result = act_u1(g, 12, precision=20)
        assert result.p_exp == 20 and result.params == low
        assert result.coefficients() == [c.lift(low) for c in act_u1(g, 12).coefficients()]
        theta = act_u(g, 12, precision=20)
        assert theta.coefficient(0) == g.alpha0.lift(low)
    with pytest.raises(InvalidParamsError):
        act_u1(g, 12, precision=0)


def test_identity_acts_trivially():
    params = make_params(3, 1, 12)
    one = GroupElem.identity(params)
    for method in METHODS:
        assert act_u1(one, 15, method).as_u1_series() == ScaledSeries.variable(params, 15)
    assert act_u(one, 15).as_u1_series() == ScaledSeries.one(params, 15)


def test_constant_terms():
    """gamma_0 = 0 and theta_0 = alpha0"""
    for g in _elements(3, 1, 12, 4, seed=5):
        assert act_u1(g, 10).coefficient(0) == 0
        theta = act_u(g, 10)
        assert theta.coefficient(0) == g.alpha0
        assert theta.target is Target.U


def test_act_u_methods_agree():
    for g in _elements(2, 1, 12, 3, seed=8):
        tables = [act_u(g, 16, method).coefficients() for method in METHODS]
        assert tables[0] == tables[1] == tables[2]


def test_odd_residue_degree_required():
    g = _elements(2, 2, 8, 1, seed=3)[0]
    with pytest.raises(ResidueDegreeParityError):
        act_u(g, 8)
    with pytest.raises(ResidueDegreeParityError):
        witt_act_u1(g.alpha0, 8)
    with pytest.raises(ResidueDegreeParityError):
        witt_act_u(g.alpha0, 8)
    with pytest.raises(ResidueDegreeError):
        witt_act_u1_recursion(g.alpha0)
    with pytest.raises(ResidueDegreeError):
        low_degree_closed(_elements(2, 3, 8, 1, seed=3)[0].alpha0)


@pytest.mark.parametrize('p', [2, 3, 5])
def test_degree_concentration(p):
    for alpha in _units(p, 12, 10, seed=p):
        general = act_u1_trees(GroupElem.witt(alpha), 40)
        assert all(n % (p + 1) == 1 for n in general.by_degree())
        degree_support_check(general, p)
        alternating = witt_act_u1(alpha, 40)
        assert alternating.stride == p + 1 and alternating.offset == 1
        assert alternating.as_u1_series() == general.as_u1_series()


def test_degree_support_check_rejects():
    params = make_params(3, 1, 6)
    values = [ScaledWitt.zero(params), ScaledWitt.of(1, params), ScaledWitt.of(1, params)]
    with pytest.raises(IntegralityError):
        degree_support_check(values, 3)


@pytest.mark.parametrize('p', [2, 3, 5])
def test_low_degree_closed(p):
    for alpha in _units(p, 16, 5, seed=20 + p):
        table = low_degree_closed(alpha)
        assert table[1] == _beta(alpha)
        result = witt_act_u1(alpha, table.valid_below)
        assert table.valid()
        for n, c in table.valid().items():
            assert result.at_degree(n) == c


def test_low_degree_closed_roots_of_unity():
    """beta^(p+1) = 1 kills every coefficient beyond u1"""
    params = make_params(5, 1, 10)
    table = low_degree_closed(WittElem.generator(params) * 7)
    assert [table[n] for n in (7, 13, 19)] == [0, 0, 0]
    assert table.valid_below == 25


@pytest.mark.parametrize('p', [2, 3, 5])
def test_delta_recursion(p):
    for alpha in _units(p, 16, 4, seed=30 + p):
        deltas = witt_act_u1_recursion(alpha, p)
        assert deltas.method is Method.WITT_RECURSION
        assert deltas.coefficient(0) == _beta(alpha)
        general = witt_act_u1(alpha, p * p + 1)
        for m in range(p):
            assert deltas.coefficient(m) == general.at_degree(1 + (p + 1) * m)


def test_first_delta_for_large_p():
    params = make_params(5, 1, 16)
    alpha = RandomElements(seed=4).unit(params)
    beta = ScaledWitt(_beta(alpha))
    delta1 = (beta ** 6 - beta).divide_by_pi()
    assert witt_act_u1_recursion(alpha).coefficient(1) == delta1


@pytest.mark.parametrize('p', [2, 3, 5])
def test_action_on_u_low_degrees(p):
    for alpha in _units(p, 16, 4, seed=40 + p):
        table = low_degree_u_closed(alpha)
        result = witt_act_u(alpha, table.valid_below)
        assert result.coefficient(0) == alpha
        for n, c in table.valid().items():
            assert result.at_degree(n) == c
        general = act_u(GroupElem.witt(alpha), table.valid_below)
        assert general.by_degree() == result.by_degree()


@pytest.mark.parametrize('p', [2, 3])
def test_composition_convention(p):
    """one product order composes the actions for every sampled pair"""
    assert composition_convention(make_params(p, 1, 16), RandomElements(seed=p), pairs=20, wmax=20) == 'gh'


@pytest.mark.parametrize('p', [2, 3, 5])
def test_linearity(p):
    params = make_params(p, 1, 12)
    rng = RandomElements(seed=50 + p)
    wmax = 2 * p + 4
    zero = WittElem.zero(params)
    # c * t has exact coordinates at every precision, and beta(c t) = t^(p-1) is a root of unity
    root = WittElem.generator(params) * rng.prime_subring_unit(params)
    report = classify_linear(GroupElem.witt(root), wmax)
    assert report.linear and report.criterion and report.witness is None
    assert classify_linear(GroupElem.witt(rng.prime_subring_unit(params)), wmax)
    nonlinear = classify_linear(GroupElem(rng.unit(params), rng.unit(params)), wmax)
    assert not nonlinear and nonlinear.witness == 2 and nonlinear.criterion is None
    generic = classify_linear(GroupElem(rng.unit(params), zero), wmax)
    assert not generic.linear and generic.criterion is False and generic.witness == p + 2


def test_ring_action():
    params = make_params(3, 1, 10)
    g = _elements(3, 1, 10, 1, seed=60)[0]
    wmax = 12
    rng = RandomElements(seed=61)
    s = ScaledSeries([rng.witt(params) for _ in range(wmax)])
    assert act_on_ring_element(GroupElem.identity(params), s, 2) == s
    u1, one = ScaledSeries.variable(params, wmax), ScaledSeries.one(params, wmax)
    assert act_on_ring_element(g, u1) == act_u1(g, wmax).as_u1_series()
    theta = act_u(g, wmax).as_u1_series()
    assert act_on_ring_element(g, one, 1) == theta
    assert act_on_ring_element(g, one, -1) * theta == one
    assert act_on_ring_element(g, one, 2) == theta * theta


def test_cartier_relation():
    """f1(G) (sigma(a1) f1 + a0 f) - f(G) (sigma(a0) f1 + pi a1 f) only has the constant term -pi a1"""
    p, wmax = 3, 20
    params = make_params(p, 1, 20)
    for g in _elements(p, 1, 20, 3, seed=70):
        G = act_u1(g, wmax).as_u1_series()
        f, f1 = f_series(p, params, wmax), f1_series(p, params, wmax)
        left = compose(f1, G) * (f1 * g.alpha1.frobenius() + f * g.alpha0)
        right = compose(f, G) * (f1 * g.alpha0.frobenius() + f * (g.alpha1 * p))
        assert left - right == ScaledSeries.monomial(params, wmax, 0, -(g.alpha1 * p))


def test_results_are_integral_and_monitored():
    g = _elements(2, 1, 16, 1, seed=80)[0]
    result = act_u1_trees(g, 30)
    assert result.series.is_integral()
    assert result.p_exp == 16 and result.u1_exp == 30
    assert result.lowest_precision >= 16
    assert result.worst_denominator >= 1


def test_budget_too_small():
    g = _elements(2, 1, 16, 1, seed=81)[0]
    with pytest.raises(PrecisionBudgetExceeded):
        act_u1_trees(g, 20, budget=0)


def test_unknown_method():
    with pytest.raises(UnknownMethodError):
        ActionDriver('nope')
    assert ActionDriver('auto').method.name == 'trees'


def test_power_table_matches_fresh_powers():
    params = make_params(2, 1, 12)
    rng = RandomElements(seed=90)
    gammas = [WittElem.zero(params)] + [rng.witt(params) for _ in range(9)]
    table = PowerTable(params, 5)
    for n in range(1, 10):
        table.advance()
        table.set_gamma(n, gammas[n], params.N)
    fresh = truncated_powers(gammas, 9, 5, params)
    for L in range(6):
        assert [table.coefficient(L, s) for s in range(10)] == fresh[L]


def test_witt_action_on_u_inverse_series():
    """alpha.u / u is a unit series whose inverse is again a series over W"""
    alpha = _units(3, 12, 1, seed=95)[0]
    theta = witt_act_u(alpha, 16).as_u1_series()
    assert (invert_unit(theta) * theta) == ScaledSeries.one(alpha.params, 16)
