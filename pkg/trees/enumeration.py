from __future__ import annotations

import logging
import os
import threading
from itertools import product
from typing import Dict, List, Optional, Tuple

from lambda_comb import LambdaSeq, enumerate_lambda, fixed_length_compositions
from .errors import EnumerationCeilingExceeded
from .labelled_tree import LabelledTree

logger = logging.getLogger(__name__)

DEFAULT_CEILING = 10 ** 7
CEILING_ENV = 'LTACTION_TREE_CEILING'


def tree_ceiling() -> int:
    """The enumeration ceiling, overridable through the environment"""
    value = os.environ.get(CEILING_ENV)
    return int(value) if value else DEFAULT_CEILING


class TreeEnumerator:
    """
    Enumerates q-labelled (or q-alternating) ordered rooted trees weight by weight.

    Trees of weight n are built from a root label (H, I) and an ordered QH-tuple of lower-weight trees
    whose weights sum to n - QI. Lists are cached per weight since every weight reuses all lower ones.
    """

    def __init__(self, q: int, alternating: bool = False, ceiling: Optional[int] = None):
        self.q = q
        self.alternating = alternating
        self.ceiling = ceiling if ceiling is not None else tree_ceiling()
        self._by_weight: Dict[int, List[LabelledTree]] = {}
        self._lock = threading.RLock()

    def _labels_up_to(self, n: int) -> List[Tuple[int, LambdaSeq]]:
        return [(v, seq) for v in range(n + 1) for seq in enumerate_lambda(self.q, v)]

    def trees_of_weight(self, n: int) -> List[LabelledTree]:
        if n < 1:
            return []
        with self._lock:
            if n not in self._by_weight:
                for lower in range(1, n):
                    self.trees_of_weight(lower)
                self._by_weight[n] = self._build(n)
                logger.debug('q=%d%s: %d trees of weight %d', self.q, ' alternating' if self.alternating else '',
                             len(self._by_weight[n]), n)
            return self._by_weight[n]

    def _build(self, n: int) -> List[LabelledTree]:
        trees: List[LabelledTree] = []
        labels = self._labels_up_to(n)
        for qi, I in labels:
            rest = n - qi
            for qh, H in labels:
                if qh > rest or (qh == 0) != (rest == 0):
                    continue
                if self.alternating and (len(H) + len(I)) % 2 == 0:
                    continue
                if qh == 0:
                    trees.append(LabelledTree(H, I))
                    continue
                for weights in fixed_length_compositions(rest, qh, n):
                    for children in product(*(self._by_weight[w] for w in weights)):
                        trees.append(LabelledTree(H, I, children))
                        if len(trees) > self.ceiling:
                            raise EnumerationCeilingExceeded(self.q, n, self.ceiling)
        return trees


_enumerators: Dict[Tuple[int, bool, int], TreeEnumerator] = {}
_enumerators_lock = threading.Lock()


def enumerate_trees(q: int, n: int, alternating: bool = False, ceiling: Optional[int] = None) -> List[LabelledTree]:
    """
    Every q-labelled (q-alternating when requested) ordered rooted tree of weight exactly n, each once.
    Intended for small weights; raises EnumerationCeilingExceeded beyond the count ceiling.
    """
    ceiling = ceiling if ceiling is not None else tree_ceiling()
    key = (q, alternating, ceiling)
    with _enumerators_lock:
        if key not in _enumerators:
            _enumerators[key] = TreeEnumerator(q, alternating, ceiling)
        enumerator = _enumerators[key]
    return enumerator.trees_of_weight(n)


def alternating_census(q: int, weights) -> Dict[int, int]:
    """Number of q-alternating trees at each requested weight"""
    return {n: len(enumerate_trees(q, n, alternating=True)) for n in weights}
