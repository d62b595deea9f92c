"""
Named verification suites. A suite is a list of independent checks; each check gets its own random stream and
returns whether it passed with a one-line detail. The checks of a run are fanned out over a thread pool.
"""
from __future__ import annotations

import logging
from itertools import chain
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence, Tuple

from series import ScaledSeries
from stabilizer import (GroupElem, ActionError, act_u1, act_u1_recursive, act_u1_trees, act_u1_functional, act_u,
                        witt_act_u1, witt_act_u, witt_act_u1_recursion, closed_gamma, low_degree_closed,
                        low_degree_u_closed, composition_convention)
from trees import enumerate_trees, alternating_census, summed_index
from utils.multithreaded import multithreaded
from utils.random_elements import RandomElements
from witt import WittElem, make_params
from .golden import load_golden

logger = logging.getLogger(__name__)

Outcome = Tuple[bool, str]
CheckFunction = Callable[[RandomElements], Outcome]


class Check(NamedTuple):
    suite: str
    name: str
    run: CheckFunction


class CheckResult(NamedTuple):
    suite: str
    name: str
    passed: bool
    detail: str

    def as_dict(self) -> Dict:
        return self._asdict()


def _golden_check(stem: str) -> CheckFunction:
    def run(_: RandomElements) -> Outcome:
        golden = load_golden(stem)
        g = golden.group_element()
        result = act_u1(g, golden.u1_exp, precision=golden.params.N)
        wrong = [n for n in range(golden.u1_exp) if result.coefficient(n) != golden.expected(n)]
        matched = sum(1 for n in golden.coefficients if n not in wrong)
        return not wrong, f'{matched}/{len(golden.coefficients)} coefficients matched' + \
            (f', wrong at degrees {wrong}' if wrong else '')
    return run


def _golden_alternating_check(stem: str) -> CheckFunction:
    def run(_: RandomElements) -> Outcome:
        golden = load_golden(stem)
        result = witt_act_u1(golden.alpha0, golden.u1_exp, precision=golden.params.N)
        expected = {n: c for n, c in golden.coefficients.items() if c}
        return result.by_degree() == expected, f'{len(result.by_degree())} nonzero coefficients'
    return run


def _paper_p2() -> List[Check]:
    return [Check('paper-p2', 'series', _golden_check('paper_p2'))]


def _paper_p3() -> List[Check]:
    return [Check('paper-p3', 'series', _golden_check('paper_p3')),
            Check('paper-p3', 'alternating trees', _golden_alternating_check('paper_p3'))]


CROSS_ORACLE_FIELDS = ((2, 1), (3, 1), (2, 2), (5, 1))


def _cross_oracle_check(p: int, f: int, M: int = 20, W: int = 40) -> CheckFunction:
    def run(rng: RandomElements) -> Outcome:
        g = rng.group_element(make_params(p, f, M))
        tables = [method(g, W).coefficients() for method in (act_u1_recursive, act_u1_trees, act_u1_functional)]
        closed = closed_gamma(g)
        low = all(tables[0][n] == closed[n] for n in range(1, 5))
        agree = tables[0] == tables[1] == tables[2]
        return agree and low, f'three methods {"agree" if agree else "disagree"} modulo (p^{M}, u1^{W}), ' \
                              f'closed gamma_1..4 {"match" if low else "differ"}'
    return run


def _cross_oracle(samples: int = 5) -> List[Check]:
    return [Check('cross-oracle', f'q={p ** f} element {i}', _cross_oracle_check(p, f))
            for p, f in CROSS_ORACLE_FIELDS for i in range(samples)]


def _witt_low_degree_check(p: int, M: int = 16) -> CheckFunction:
    def run(rng: RandomElements) -> Outcome:
        alpha = rng.unit(make_params(p, 1, M))
        failures = []
        table = low_degree_closed(alpha)
        result = witt_act_u1(alpha, max(table.valid_below, p * p + 1))
        if any(result.at_degree(n) != c for n, c in table.valid().items()):
            failures.append('closed u1 formulas')
        deltas = witt_act_u1_recursion(alpha)
        if any(deltas.coefficient(m) != result.at_degree(1 + (p + 1) * m) for m in range(p)):
            failures.append('delta recursion')
        u_table = low_degree_u_closed(alpha)
        theta = witt_act_u(alpha, u_table.valid_below)
        if any(theta.at_degree(n) != c for n, c in u_table.valid().items()):
            failures.append('closed u formulas')
        return not failures, 'closed formulas and delta recursion match' if not failures else \
            'mismatch: ' + ', '.join(failures)
    return run


def _witt_low_degree(samples: int = 3) -> List[Check]:
    return [Check('witt-low-degree', f'p={p} unit {i}', _witt_low_degree_check(p))
            for p in (2, 3, 5) for i in range(samples)]


CENSUS = {2: [1, 1, 3, 10], 3: [1, 1, 1, 3], 5: [1, 1, 1, 1]}


def _census_check(_: RandomElements) -> Outcome:
    counts = {q: [len(enumerate_trees(q, n)) for n in range(1, len(expected) + 1)] for q, expected in CENSUS.items()}
    return counts == CENSUS, f'counts at weights 1-4: {counts}'


def _alternating_census_check(_: RandomElements) -> Outcome:
    counts = {p: alternating_census(p, (1, p + 2, 2 * p + 3)) for p in (5, 7)}
    expected = {p: {1: 1, p + 2: 2, 2 * p + 3: 2 * p + 4} for p in (5, 7)}
    return counts == expected, f'alternating counts: {counts}'


def _brute_force_check(q: int, top: int, M: int = 16) -> CheckFunction:
    def run(rng: RandomElements) -> Outcome:
        g = rng.group_element(make_params(q, 1, M))
        result = act_u1_trees(g, top + 1)
        wrong = [n for n in range(1, top + 1)
                 if summed_index(enumerate_trees(q, n), g.alpha0, g.alpha1) != result.coefficient(n)]
        return not wrong, f'tree sums through weight {top}' + (f' differ at {wrong}' if wrong else ' match')
    return run


def _trees_census() -> List[Check]:
    return [Check('trees-census', 'labelled trees', _census_check),
            Check('trees-census', 'alternating trees', _alternating_census_check),
            Check('trees-census', 'q=2 brute force', _brute_force_check(2, 7)),
            Check('trees-census', 'q=3 brute force', _brute_force_check(3, 6))]


def _identity_check(_: RandomElements) -> Outcome:
    wrong = []
    for p in (2, 3, 5):
        params = make_params(p, 1, 10)
        if act_u1(GroupElem.identity(params), 12).as_u1_series() != ScaledSeries.variable(params, 12):
            wrong.append(p)
    return not wrong, 'identity acts trivially' if not wrong else f'identity moves u1 for p in {wrong}'


def _constant_terms_check(rng: RandomElements) -> Outcome:
    g = rng.group_element(make_params(3, 1, 12))
    gamma, theta = act_u1(g, 12), act_u(g, 12)
    ok = gamma.coefficient(0) == 0 and theta.coefficient(0) == g.alpha0
    integral = all(r.lowest_precision >= 12 for r in (gamma, theta))
    return ok and integral, f'gamma_0 = 0 and theta_0 = alpha0: {ok}, integral to p^12: {integral}'


def _group_law_check(rng: RandomElements) -> Outcome:
    params = make_params(3, 1, 10)
    g, h, k = (rng.group_element(params) for _ in range(3))
    S = GroupElem.uniformizer(params)
    ok = (g * h) * k == g * (h * k) and S * S == GroupElem.order_element(WittElem.from_int(3, params),
                                                                          WittElem.zero(params))
    return ok, 'associative, S^2 = p' if ok else 'group law violated'


def _composition_check(p: int) -> CheckFunction:
    def run(rng: RandomElements) -> Outcome:
        order = composition_convention(make_params(p, 1, 12), rng, pairs=6, wmax=12)
        return order == 'gh', f'g.(h.u1) = ({order}).u1'
    return run


def _axioms() -> List[Check]:
    return [Check('axioms', 'identity', _identity_check),
            Check('axioms', 'constant terms', _constant_terms_check),
            Check('axioms', 'group law', _group_law_check),
            Check('axioms', 'composition q=2', _composition_check(2)),
            Check('axioms', 'composition q=3', _composition_check(3))]


SUITES: Dict[str, Callable[[], List[Check]]] = {
    'paper-p2': _paper_p2,
    'paper-p3': _paper_p3,
    'cross-oracle': _cross_oracle,
    'witt-low-degree': _witt_low_degree,
    'trees-census': _trees_census,
    'axioms': _axioms,
}
ALL = 'all'


def suite_names(name: str) -> List[str]:
    """
    :raises KeyError: unknown suite
    """
    if name == ALL:
        return list(SUITES)
    if name not in SUITES:
        raise KeyError(name)
    return [name]


def _run_chunk(tasks: Sequence[Tuple[int, Check, RandomElements]]) -> List[Tuple[int, CheckResult]]:
    results = []
    for i, check, rng in tasks:
        try:
            passed, detail = check.run(rng)
        except ActionError as e:
            passed, detail = False, f'{type(e).__name__}: {e}'
        logger.info('%s / %s: %s', check.suite, check.name, 'ok' if passed else 'FAILED')
        results.append((i, CheckResult(check.suite, check.name, bool(passed), detail)))
    return results


def run_checks(checks: Sequence[Check], seed: Optional[int] = None, threads: Optional[int] = None) \
        -> List[CheckResult]:
    """Every check, each with its own jumped random stream, in the given order"""
    streams = RandomElements(seed).spawn(len(checks))
    tasks = [(i, check, rng) for i, (check, rng) in enumerate(zip(checks, streams))]
    runner = multithreaded(_run_chunk, threads=threads)

    @runner.params
    def split(count, all_tasks):
        return [((all_tasks[i::count],), {}) for i in range(count)]

    @runner.after
    def merge(outs):
        return [result for _, result in sorted(chain.from_iterable(outs), key=lambda pair: pair[0])]

    return runner(tasks)


def run_suite(name: str, seed: Optional[int] = None, threads: Optional[int] = None) -> List[CheckResult]:
    checks = list(chain.from_iterable(SUITES[suite]() for suite in suite_names(name)))
    return run_checks(checks, seed, threads)
