from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Tuple

from lambda_comb import LambdaSeq, lambda_table
from trees import vertex_factor
from witt import ScaledWitt, WittElem


@dataclass(frozen=True)
class RootLabel:
    """
    A possible root label (H, I) of a labelled tree: the root has QH children and contributes QI to the weight.

    Attributes:
        H, I: the label
        qh: QH
        qi: QI
    """
    H: LambdaSeq
    I: LambdaSeq
    qh: int
    qi: int

    @property
    def is_linear(self) -> bool:
        """(H, I) = ((0), ()): a single child of the full weight, the term solved for"""
        return self.H == (0,) and self.I == ()

    @property
    def is_alternating(self) -> bool:
        return (len(self.H) + len(self.I)) % 2 == 1


@lru_cache(maxsize=None)
def root_labels(q: int, bound: int, alternating: bool = False) -> Tuple[RootLabel, ...]:
    """Every label with QH + QI < bound except the empty one, ordered by QI then QH"""
    table = lambda_table(q, bound)
    labels = []
    for qi, I_seqs in table.items():
        for I in I_seqs:
            for qh, H_seqs in table.items():
                if qh + qi >= bound:
                    break
                for H in H_seqs:
                    label = RootLabel(H, I, qh, qi)
                    if (qh, qi) == (0, 0) or (alternating and not label.is_alternating):
                        continue
                    labels.append(label)
    return tuple(labels)


class LabelFactors:
    """
    The vertex factors (-1)^|H| sigma^|I|(alpha_s) / pi^floor(s/2) of one group element, every factor brought
    to the common denominator p^denom_exp. Labels whose factor vanishes exactly are dropped.

    Attributes:
        denom_exp: the common denominator exponent
        numerators: label -> integral numerator over p^denom_exp
        valuations: label -> valuation of the factor
    """

    def __init__(self, labels: Tuple[RootLabel, ...], alpha0: WittElem, alpha1: WittElem):
        factors: Dict[RootLabel, ScaledWitt] = {}
        for label in labels:
            factor = vertex_factor(label.H, label.I, alpha0, alpha1)
            if any(factor.num.coeffs):
                factors[label] = factor
        self.labels = tuple(factors)
        self.denom_exp = max((f.exp for f in factors.values()), default=0)
        self.numerators = {label: f.num.times_p(self.denom_exp - f.exp) for label, f in factors.items()}
        self.valuations = {label: f.valuation() for label, f in factors.items()}

    def __len__(self):
        return len(self.labels)
