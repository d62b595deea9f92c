from __future__ import annotations

from enum import Enum
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple, Union

LambdaSeq = Tuple[int, ...]


class Parity(Enum):
    """Length-parity classes of Lambda"""
    ALL = 'all'
    ODD = 'odd'
    EVEN = 'even'

    def admits(self, seq: Sequence[int]) -> bool:
        if self is Parity.ALL:
            return True
        return (len(seq) % 2 == 1) == (self is Parity.ODD)


def is_lambda(seq: Sequence[int]) -> bool:
    """Strictly increasing, parity-alternating, first entry even"""
    if not seq:
        return True
    if seq[0] < 0 or seq[0] % 2:
        return False
    return all(b > a and (b - a) % 2 == 1 for a, b in zip(seq, seq[1:]))


def q_value(seq: Sequence[int], q: int) -> int:
    """QI: the sum of q^i over the entries"""
    return sum(q ** i for i in seq)


@lru_cache(maxsize=None)
def _tails(q: int, remaining: int, start: int) -> Tuple[LambdaSeq, ...]:
    """Lambda-type tails whose first entry is start, start + 2, ... and whose q-values sum to remaining"""
    if remaining == 0:
        return ((),)
    found = []
    entry = start
    while q ** entry <= remaining:
        for tail in _tails(q, remaining - q ** entry, entry + 1):
            found.append((entry,) + tail)
        entry += 2
    return tuple(found)


def enumerate_lambda(q: int, n: int, parity: Union[Parity, str] = Parity.ALL) -> List[LambdaSeq]:
    """
    All I in Lambda with QI = n in the requested length-parity class, in lexicographic order.
    :param q: a prime power
    :param n: a nonnegative integer
    :param parity: 'all', 'odd' or 'even'
    """
    parity = Parity(parity)
    if n < 0:
        return []
    return [seq for seq in _tails(q, n, 0) if parity.admits(seq)]


def lambda_table(q: int, bound: int, parity: Union[Parity, str] = Parity.ALL) -> Dict[int, List[LambdaSeq]]:
    """{n: enumerate_lambda(q, n, parity)} for every n < bound with a nonempty class"""
    table = {}
    for n in range(bound):
        seqs = enumerate_lambda(q, n, parity)
        if seqs:
            table[n] = seqs
    return table
