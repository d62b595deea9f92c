import sys

import pytest

from ltaction.logger import run_log
from utils.multithreaded import Multithreaded, multithreaded, default_threads, THREADS_ENV
from utils.random_elements import RandomElements
from witt import make_params


@multithreaded(threads=3)
def _partial_sum(values):
    return sum(values)


@_partial_sum.params
def _split(threads, values):
    return [((values[i::threads],), {}) for i in range(threads)]


@_partial_sum.after
def _total(outs):
    return sum(outs)


def test_multithreaded_split_and_merge():
    assert len(_partial_sum) == 3
    assert _partial_sum(list(range(100))) == 4950


def test_multithreaded_default_hooks():
    square = Multithreaded(lambda x: x * x, threads=2)
    assert square(7) == [49]


def test_multithreaded_raises():
    @multithreaded(threads=2)
    def fail(x):
        raise ArithmeticError(x)

    with pytest.raises(ArithmeticError):
        fail(1)


def test_default_threads(monkeypatch):
    monkeypatch.setenv(THREADS_ENV, '5')
    assert default_threads() == 5
    monkeypatch.setenv(THREADS_ENV, '0')
    with pytest.raises(ValueError):
        default_threads()
    monkeypatch.delenv(THREADS_ENV)
    assert default_threads() >= 1


def test_random_elements():
    params = make_params(3, 2, 40)
    a, b = RandomElements(seed=4), RandomElements(seed=4)
    assert a.witt(params) == b.witt(params)
    assert all(a.unit(params).is_unit() for _ in range(20))
    assert a.prime_subring_unit(params).in_prime_subring()
    g = a.group_element(params, witt_only=True)
    assert g.is_witt() and g.is_unit()
    assert 0 <= a.integer(3, 9) < 9


def test_spawned_streams_differ():
    params = make_params(2, 1, 64)
    first, second = RandomElements(seed=1).spawn(2)
    assert first.witt(params) != second.witt(params)
    again = RandomElements(seed=1).spawn(2)
    assert again[0].witt(params) == RandomElements(seed=1).spawn(1)[0].witt(params)


def test_logger_tees(tmp_path):
    path = tmp_path / 'run'
    with run_log(path) as logged:
        assert logged == path
        print('to stdout')
        print('to stderr', file=sys.stderr)
    print('not logged')
    assert (tmp_path / 'run.txt').read_text() == 'to stdout\n'
    assert (tmp_path / 'run.err.txt').read_text() == 'to stderr\n'
