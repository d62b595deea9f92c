"""
Series records: one {"n", "denom_exp", "coeff"} record per nonzero degree, with the coefficient value
coeff / p^denom_exp in lowest terms and coeff reduced modulo p^(prec + denom_exp), so that equal values
always serialize identically.
"""
from __future__ import annotations

from typing import Any, Dict, List

from witt import ScaledWitt, WittElem, WittParams
from .scaled_series import ScaledSeries


def coefficient_record(n: int, value: ScaledWitt) -> Dict[str, Any]:
    modulus = value.params.p ** max(0, value.prec + value.exp)
    return {'n': n, 'denom_exp': value.exp, 'coeff': [c % modulus for c in value.num.coeffs]}


def series_to_records(series: ScaledSeries) -> List[Dict[str, Any]]:
    records = []
    for n, value in enumerate(series.scaled_coefficients()):
        if value.is_zero():
            continue
        records.append(coefficient_record(n, value))
    return records


def series_from_records(records: List[Dict[str, Any]], params: WittParams, wmax: int, prec: int) -> ScaledSeries:
    """Inverse of series_to_records for a series known modulo p^prec"""
    values = [ScaledWitt(WittElem.zero(params), 0, prec) for _ in range(wmax)]
    for record in records:
        values[record['n']] = ScaledWitt(WittElem(record['coeff'], params), record['denom_exp'], prec)
    return ScaledSeries.from_scaled(values)
