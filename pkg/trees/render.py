from __future__ import annotations

from typing import Any, List

from lambda_comb import LambdaSeq
from .labelled_tree import LabelledTree, weight


def _seq(seq: LambdaSeq) -> str:
    return '(' + ','.join(str(i) for i in seq) + ')'


def render_text(tree: LabelledTree, q: int, indent: str = '  ') -> str:
    """One vertex per line, 'H=(..) I=(..) wt=..', children indented below their parent"""
    lines: List[str] = []

    def walk(node: LabelledTree, depth: int):
        lines.append(f'{indent * depth}H={_seq(node.H)} I={_seq(node.I)} wt={weight(node, q)}')
        for child in node.children:
            walk(child, depth + 1)

    walk(tree, 0)
    return '\n'.join(lines)


def to_nested(tree: LabelledTree) -> List[Any]:
    """[[H...], [I...], [child, ...]]"""
    return [list(tree.H), list(tree.I), [to_nested(child) for child in tree.children]]


def from_nested(data: List[Any]) -> LabelledTree:
    H, I, children = data
    return LabelledTree(tuple(H), tuple(I), tuple(from_nested(child) for child in children))
