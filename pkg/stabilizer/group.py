from __future__ import annotations

from dataclasses import dataclass, InitVar

from witt import WittElem, WittParams, NonUnitError, ParamsMismatchError


@dataclass(frozen=True)
class GroupElem:
    """
    alpha0 + alpha1*S in the maximal order of the height 2 division algebra, where S^2 = pi and
    S w = sigma(w) S for w in W(F_{q^2}). The stabilizer group consists of the elements with alpha0 a unit.

    Attributes:
        alpha0: the W(F_{q^2}) part, a unit for group elements
        alpha1: the coefficient of S
    """
    alpha0: WittElem
    alpha1: WittElem
    check: InitVar[bool] = True

    def __post_init__(self, check: bool):
        if self.alpha0.params != self.alpha1.params:
            raise ParamsMismatchError(f'{self.alpha0.params} and {self.alpha1.params} differ')
        if check and not self.alpha0.is_unit():
            raise NonUnitError(f'alpha0 = {self.alpha0} is not a unit, so this is not a group element')

    @classmethod
    def order_element(cls, alpha0: WittElem, alpha1: WittElem) -> GroupElem:
        """An element of the maximal order that need not be invertible, such as S itself"""
        return cls(alpha0, alpha1, check=False)

    @classmethod
    def identity(cls, params: WittParams) -> GroupElem:
        return cls(WittElem.one(params), WittElem.zero(params))

    @classmethod
    def witt(cls, alpha: WittElem) -> GroupElem:
        """The image of a unit of W(F_{q^2})"""
        return cls(alpha, WittElem.zero(alpha.params))

    @classmethod
    def uniformizer(cls, params: WittParams) -> GroupElem:
        """S"""
        return cls.order_element(WittElem.zero(params), WittElem.one(params))

    @property
    def params(self) -> WittParams:
        return self.alpha0.params

    def is_unit(self) -> bool:
        return self.alpha0.is_unit()

    def is_witt(self) -> bool:
        return not any(self.alpha1.coeffs)

    def lift(self, params: WittParams) -> GroupElem:
        return GroupElem(self.alpha0.lift(params), self.alpha1.lift(params), check=False)

    def __mul__(self, other: GroupElem) -> GroupElem:
        if not isinstance(other, GroupElem):
            return NotImplemented
        return group_mul(self, other)

    def __str__(self):
        return f'({self.alpha0}) + ({self.alpha1})*S'


def group_mul(g: GroupElem, h: GroupElem) -> GroupElem:
    """
    (a0 + a1 S)(b0 + b1 S) = (a0 b0 + pi a1 sigma(b1)) + (a0 b1 + a1 sigma(b0)) S
    :raises ParamsMismatchError: g and h live over different rings
    """
    if g.params != h.params:
        raise ParamsMismatchError(f'{g.params} and {h.params} differ')
    alpha0 = g.alpha0 * h.alpha0 + (g.alpha1 * h.alpha1.frobenius()) * g.params.p
    alpha1 = g.alpha0 * h.alpha1 + g.alpha1 * h.alpha0.frobenius()
    return GroupElem(alpha0, alpha1, check=False)
