"""
Guards for computations that only hold for some residue fields F_q, q = p^f.

Both decorators look up the ring from the first group element, Witt element, series or WittParams
among the call arguments and reject the call before any work is done. They can be applied bare or with
a description of the guarded computation:

    @requires_odd_residue_degree
    def act_u(g, wmax): ...

    @requires_prime_residue_field(what='the delta recursion')
    def witt_act_u1_recursion(alpha): ...
"""
from itertools import chain
from typing import Optional

import wrapt

from series import ScaledSeries
from witt import WittElem, WittParams
from .errors import ResidueDegreeError, ResidueDegreeParityError
from .group import GroupElem


def _params_of(args, kwargs) -> Optional[WittParams]:
    for value in chain(args, kwargs.values()):
        if isinstance(value, WittParams):
            return value
        if isinstance(value, (GroupElem, WittElem, ScaledSeries)):
            return value.params
    return None


def _guard(check, func, what):
    @wrapt.decorator
    def wrapper(wrapped, instance, args, kwargs):
        params = _params_of(args, kwargs)
        if params is not None:
            check(params, what or wrapped.__name__)
        return wrapped(*args, **kwargs)

    return wrapper(func) if func else wrapper


def _odd(params: WittParams, what: str):
    if params.f % 2 == 0:
        raise ResidueDegreeParityError(params.f, what)


def _prime(params: WittParams, what: str):
    if params.f != 1:
        raise ResidueDegreeError(f'{what} needs q = p, got q = {params.p}^{params.f}')


def requires_odd_residue_degree(func=None, *, what: str = None):
    """
    :param func: the function to guard
    :param what: name of the computation in the error message, defaults to the function name
    """
    return _guard(_odd, func, what)


def requires_prime_residue_field(func=None, *, what: str = None):
    return _guard(_prime, func, what)
