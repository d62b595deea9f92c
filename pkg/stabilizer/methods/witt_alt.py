from __future__ import annotations

from series import PrecisionMonitor
from .trees import TreesMethod
from ..action_result import Method
from ..gating import requires_odd_residue_degree
from ..group import GroupElem


class WittAlternatingMethod(TreesMethod):
    """
    The tree sum for g = alpha in W(F_{q^2})^x: with alpha1 = 0 only q-alternating trees have a nonzero index,
    so only the root labels with |H| + |I| odd take part.
    """
    name = 'witt-alt'
    method = Method.WITT_ALT
    alternating = True

    @requires_odd_residue_degree
    def __init__(self, g: GroupElem, wmax: int, monitor: PrecisionMonitor, **kwargs):
        if not g.is_witt():
            raise ValueError('the alternating tree sum needs alpha1 = 0')
        super().__init__(g, wmax, monitor, **kwargs)
