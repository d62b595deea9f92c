from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple, Optional, Tuple

from lambda_comb import LambdaSeq, is_lambda, q_value


@dataclass(frozen=True)
class LabelledTree:
    """
    An ordered rooted tree with a label (H, I) in Lambda x Lambda at every vertex.

    A valid q-labelling has QH children at every vertex and strictly decreasing positive vertex weights
    along every edge, where the weight of a vertex is the sum of QI over the subtree it roots.
    Trees compare structurally and are hashable.

    Attributes:
        H: first label, QH is the number of children
        I: second label, contributes QI to the weight
        children: ordered subtrees
    """
    H: LambdaSeq = ()
    I: LambdaSeq = ()
    children: Tuple[LabelledTree, ...] = ()

    @property
    def label(self) -> Tuple[LambdaSeq, LambdaSeq]:
        return self.H, self.I

    def vertices(self) -> Iterator[LabelledTree]:
        """Preorder"""
        yield self
        for child in self.children:
            yield from child.vertices()

    @property
    def size(self) -> int:
        return sum(1 for _ in self.vertices())

    def weight(self, q: int) -> int:
        return weight(self, q)

    def is_alternating(self) -> bool:
        return all((len(v.H) + len(v.I)) % 2 == 1 for v in self.vertices())


def leaf(I: LambdaSeq = (0,)) -> LabelledTree:
    return LabelledTree((), I)


@lru_cache(maxsize=None)
def weight(tree: LabelledTree, q: int) -> int:
    """wt(T): the sum of QI over every vertex"""
    return q_value(tree.I, q) + sum(weight(child, q) for child in tree.children)


class ValidationReport(NamedTuple):
    """
    ok: whether the candidate is a valid labelled tree
    path: child indices from the root to the first violating vertex
    reason: human readable description of the violation
    """
    ok: bool
    path: Tuple[int, ...] = ()
    reason: str = ''

    def __bool__(self):
        return self.ok


def _first_violation(tree: LabelledTree, q: int, alternating: bool, path: Tuple[int, ...]) \
        -> Optional[ValidationReport]:
    for name, seq in (('H', tree.H), ('I', tree.I)):
        if not is_lambda(seq):
            return ValidationReport(False, path, f'{name}={seq} is not in Lambda')
    if alternating and (len(tree.H) + len(tree.I)) % 2 == 0:
        return ValidationReport(False, path, '|H| and |I| have the same parity')
    expected = q_value(tree.H, q)
    if len(tree.children) != expected:
        return ValidationReport(False, path, f'{len(tree.children)} children but QH={expected}')
    own = weight(tree, q)
    if own <= 0:
        return ValidationReport(False, path, 'weight is not positive')
    for i, child in enumerate(tree.children):
        if weight(child, q) >= own:
            return ValidationReport(False, path + (i,), f'weight {weight(child, q)} is not below parent {own}')
    for i, child in enumerate(tree.children):
        report = _first_violation(child, q, alternating, path + (i,))
        if report is not None:
            return report
    return None


def validate(tree: LabelledTree, q: int, alternating: bool = False) -> ValidationReport:
    """
    Check both labelling conditions and Lambda membership at every vertex, preorder.
    :param tree: candidate tree
    :param q: prime power
    :param alternating: additionally require |H| and |I| of opposite parity everywhere
    :return: a report naming the first violating vertex, truthy when the tree is valid
    """
    report = _first_violation(tree, q, alternating, ())
    return report if report is not None else ValidationReport(True)
