from __future__ import annotations

from typing import Iterable, Optional

from lambda_comb import LambdaSeq
from witt import ScaledWitt, WittElem
from .labelled_tree import LabelledTree


def vertex_factor(H: LambdaSeq, I: LambdaSeq, alpha0: WittElem, alpha1: WittElem) -> ScaledWitt:
    """
    (-1)^|H| sigma^|I|(alpha_s) / pi^floor(s/2), s = |H| + |I| - 1 with the subscript of alpha taken mod 2.
    The common 1/alpha0 of every vertex is not included.
    """
    s = len(H) + len(I) - 1
    alpha = alpha0 if s % 2 == 0 else alpha1
    if len(I) % 2:
        alpha = alpha.frobenius()
    if len(H) % 2:
        alpha = -alpha
    value = ScaledWitt(alpha)
    e = s // 2
    return value.divide_by_pi(e) if e >= 0 else value.times_pi(-e)


def _product(tree: LabelledTree, alpha0: WittElem, alpha1: WittElem) -> ScaledWitt:
    inverse = alpha0.inv()
    result: Optional[ScaledWitt] = None
    for v in tree.vertices():
        factor = vertex_factor(v.H, v.I, alpha0, alpha1) * inverse
        result = factor if result is None else result * factor
    return result


def index(tree: LabelledTree, alpha0: WittElem, alpha1: WittElem) -> ScaledWitt:
    """
    The (alpha0, alpha1)-index: the product over vertices of (1/alpha0) times the vertex factor.
    :raises NonUnitError: alpha0 is not a unit
    """
    return _product(tree, alpha0, alpha1)


def index_alt(tree: LabelledTree, alpha: WittElem) -> ScaledWitt:
    """The alpha-index of a q-alternating tree, i.e. the index with alpha0 = alpha, alpha1 = 0"""
    if not tree.is_alternating():
        raise ValueError('index_alt needs a q-alternating tree')
    return _product(tree, alpha, WittElem.zero(alpha.params))


def summed_index(trees: Iterable[LabelledTree], alpha0: WittElem, alpha1: Optional[WittElem] = None) -> ScaledWitt:
    """Exact sum of indices; with alpha1 omitted the trees are treated as alternating"""
    total = ScaledWitt.zero(alpha0.params)
    for tree in trees:
        total = total + (index_alt(tree, alpha0) if alpha1 is None else index(tree, alpha0, alpha1))
    return total
