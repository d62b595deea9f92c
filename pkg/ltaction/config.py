from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from stabilizer import GroupElem, ResidueDegreeParityError, Target, ActionDriver
from witt import WittElem, WittParams, make_params, parse_elem, InvalidParamsError

AUTO = 'auto'
WITT_ALT = 'witt-alt'
FORMATS = ('table', 'json')


@dataclass(frozen=True)
class RunConfig:
    """
    One action computation as requested on the command line.

    Attributes:
        p, f: the residue field F_q, q = p^f
        m: p-adic output precision M
        w: u1-adic truncation W
        alpha0, alpha1: expressions in z for the element alpha0 + alpha1 S
        alpha: an expression for an element of W(F_{q^2})^x; excludes alpha0 and alpha1
        target: 'u1' or 'u'
        method: 'auto', a name registered with ActionDriver, or 'witt-alt' for the alternating tree sums
        fmt: 'table' or 'json'
        budget: internal denominator budget, defaults to W
    """
    p: int
    f: int = 1
    m: int = 20
    w: int = 20
    alpha0: Optional[str] = None
    alpha1: Optional[str] = None
    alpha: Optional[str] = None
    target: str = Target.U1.value
    method: str = AUTO
    fmt: str = 'table'
    budget: Optional[int] = None

    @property
    def params(self) -> WittParams:
        return make_params(self.p, self.f, self.m)

    @property
    def internal_params(self) -> WittParams:
        """precision N = M + budget, at which the expressions are read"""
        return make_params(self.p, self.f, self.m + (self.w if self.budget is None else self.budget))

    @property
    def target_kind(self) -> Target:
        return Target(self.target)

    def validate(self):
        """
        :raises InvalidParamsError: bad p, f, M, W, format or method
        :raises ResidueDegreeParityError: the target or the method needs an odd f
        """
        for name in ('m', 'w'):
            if getattr(self, name) < 1:
                raise InvalidParamsError(f'{name} must be positive, got {getattr(self, name)}')
        if self.budget is not None and self.budget < 0:
            raise InvalidParamsError(f'budget must be nonnegative, got {self.budget}')
        if self.fmt not in FORMATS:
            raise InvalidParamsError(f'unknown format {self.fmt!r}')
        if self.method != AUTO and self.method not in ActionDriver.methods:
            raise InvalidParamsError(f'unknown method {self.method!r}')
        if self.alpha is not None and (self.alpha0 is not None or self.alpha1 is not None):
            raise InvalidParamsError('give either alpha or alpha0/alpha1')
        params = self.params
        if params.f % 2 == 0 and (self.target_kind is Target.U or self.method == WITT_ALT):
            raise ResidueDegreeParityError(params.f, 'the action on u' if self.target_kind is Target.U
                                           else 'the alternating tree sums')
        return self

    @property
    def is_witt(self) -> bool:
        return self.alpha is not None

    def group_element(self) -> GroupElem:
        """
        The element, parsed at the internal precision: its action modulo p^M depends on the digits beyond p^M.
        :raises ExpressionSyntaxError: an expression does not parse
        :raises NonUnitError: alpha0 is not a unit
        """
        params = self.internal_params
        if self.is_witt:
            return GroupElem.witt(parse_elem(self.alpha, params))
        alpha0 = parse_elem(self.alpha0 if self.alpha0 is not None else '1', params)
        alpha1 = parse_elem(self.alpha1, params) if self.alpha1 is not None else WittElem.zero(params)
        return GroupElem(alpha0, alpha1)
