"""
Rendering of action results: an aligned text table, or a json document

    {"p", "f", "precision": {"p_exp", "u1_exp"}, "alpha0", "alpha1", "target", "method", "series": [records]}

whose series records are those of series.serialization, indexed by u1-degree.
"""
from __future__ import annotations

import json
from typing import Any, Dict, Optional, Sequence, Tuple

from series import ScaledSeries, coefficient_record, series_to_records, series_from_records
from stabilizer import ActionResult, GroupElem
from trees import LabelledTree, render_text, to_nested
from witt import ScaledWitt, WittElem, make_params, format_elem


def format_coefficient(c: WittElem) -> str:
    """The balanced integer when c lies in Z/p^M, the polynomial in z otherwise"""
    value = c.balanced_integer()
    return str(value) if value is not None else format_elem(c)


def render_table(result: ActionResult, g: GroupElem) -> str:
    variable = 'u1' if result.target.value == 'u1' else 'u'
    lines = [f'# g = ({format_elem(g.alpha0)}) + ({format_elem(g.alpha1)}) S',
             f'# g.{variable} modulo (p^{result.p_exp}, u1^{result.u1_exp}), method {result.method.value}']
    if result.target.value == 'u':
        lines.append('# coefficients of g.u / u')
    rows = [(str(n), format_coefficient(c)) for n, c in sorted(result.by_degree().items())]
    width = max((len(n) for n, _ in rows), default=1)
    lines.extend(f'{n.rjust(width)}  {value}' for n, value in rows)
    return '\n'.join(lines)


def result_document(result: ActionResult, g: GroupElem) -> Dict[str, Any]:
    params = result.params
    return {
        'p': params.p,
        'f': params.f,
        'precision': {'p_exp': result.p_exp, 'u1_exp': result.u1_exp},
        'alpha0': list(g.alpha0.coeffs),
        'alpha1': list(g.alpha1.coeffs),
        'target': result.target.value,
        'method': result.method.value,
        'series': series_to_records(result.as_u1_series()),
    }


def render_json(result: ActionResult, g: GroupElem) -> str:
    return json.dumps(result_document(result, g), indent=2)


def read_json(text: str) -> Tuple[GroupElem, ScaledSeries]:
    """The element and the dense u1-series of a json document"""
    document = json.loads(text)
    precision = document['precision']
    params = make_params(document['p'], document['f'], precision['p_exp'])
    g = GroupElem(WittElem(document['alpha0'], params), WittElem(document['alpha1'], params))
    series = series_from_records(document['series'], params, precision['u1_exp'], params.N)
    return g, series


def format_scaled(value: ScaledWitt) -> str:
    if value.exp == 0:
        return format_coefficient(value.num)
    return f'({format_coefficient(value.num)}) / {value.params.p}^{value.exp}'


def render_census(trees: Sequence[LabelledTree], q: int, n: int, indices: Optional[Sequence[ScaledWitt]] = None,
                  total: Optional[ScaledWitt] = None) -> str:
    """Each tree of weight n followed by its index, then the count and the summed index"""
    blocks = []
    for i, tree in enumerate(trees):
        header = f'tree {i + 1}, weight {n}'
        if indices is not None:
            header += f', index {format_scaled(indices[i])}'
        blocks.append(header + '\n' + render_text(tree, q))
    footer = f'{len(trees)} trees of weight {n} for q={q}'
    if total is not None:
        footer += f', summed index {format_scaled(total)}'
    return '\n\n'.join(blocks + [footer])


def census_document(trees: Sequence[LabelledTree], q: int, n: int, indices: Optional[Sequence[ScaledWitt]] = None,
                    total: Optional[ScaledWitt] = None) -> Dict[str, Any]:
    entries = []
    for i, tree in enumerate(trees):
        entry = {'tree': to_nested(tree)}
        if indices is not None:
            entry['index'] = coefficient_record(n, indices[i])
        entries.append(entry)
    document = {'q': q, 'weight': n, 'count': len(trees), 'trees': entries}
    if total is not None:
        document['summed_index'] = coefficient_record(n, total)
    return document
