"""
Published example series, shipped as toml files next to this module.

A file gives p, f, the precision (p_exp, u1_exp), the element as two expressions in z, and its nonzero
coefficients either as integers ([coefficients], degree = value) or as rationals
scale * (real + imag * i) / denominator^five ([[rationals]]), i being the expression imaginary_unit.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List

import toml

from stabilizer import GroupElem
from witt import WittElem, WittParams, make_params, parse_elem

GOLDEN_DIR = Path(__file__).parent / 'golden'


@dataclass(frozen=True)
class GoldenSeries:
    """
    Attributes:
        name: the suite name
        params: the ring, at precision p_exp
        u1_exp: truncation of the published series
        alpha0, alpha1: the element, at the internal precision p_exp + u1_exp of a run with the default budget
        coefficients: every nonzero coefficient below u1^u1_exp, keyed by degree
    """
    name: str
    params: WittParams
    u1_exp: int
    alpha0: WittElem
    alpha1: WittElem
    coefficients: Dict[int, WittElem]

    def group_element(self) -> GroupElem:
        """The element; its action taken with precision=params.N is the published series"""
        return GroupElem(self.alpha0, self.alpha1)

    def expected(self, n: int) -> WittElem:
        return self.coefficients.get(n, WittElem.zero(self.params))


def _rational(record: dict, unit: WittElem, denominator: WittElem) -> WittElem:
    params = unit.params
    numerator = WittElem.from_int(record['real'], params) + unit * record['imag']
    return numerator * record['scale'] * denominator.inv() ** record['five']


def golden_names() -> List[str]:
    return sorted(path.stem for path in GOLDEN_DIR.glob('*.toml'))


def load_golden(stem: str) -> GoldenSeries:
    """
    :param stem: file name without extension, e.g. 'paper_p2'
    """
    data = toml.load(GOLDEN_DIR / f'{stem}.toml')
    params = make_params(data['p'], data['f'], data['p_exp'])
    coefficients = {int(n): WittElem.from_int(value, params) for n, value in data.get('coefficients', {}).items()}
    if 'rationals' in data:
        unit = parse_elem(data['imaginary_unit'], params)
        denominator = WittElem.from_int(data['denominator'], params)
        for record in data['rationals']:
            coefficients[record['n']] = _rational(record, unit, denominator)
    internal = params.with_precision(params.N + data['u1_exp'])
    return GoldenSeries(data['name'], params, data['u1_exp'], parse_elem(data['alpha0'], internal),
                        parse_elem(data['alpha1'], internal), coefficients)
