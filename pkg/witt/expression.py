"""
Element expressions: integer-coefficient polynomials in the Teichmuller generator z.

Grammar (conventional precedence, ^ binds tightest, then unary sign, then *, then binary + and -):
    atom   := integer | 'z' | '(' expr ')'
    factor := atom ['^' integer]
"""
from __future__ import annotations

from functools import lru_cache

import pyparsing as pp

from .element import WittElem, format_elem
from .errors import ExpressionSyntaxError
from .params import WittParams

__all__ = ['parse_elem', 'format_elem']


class _Node:
    def evaluate(self, params: WittParams) -> WittElem:
        raise NotImplementedError


class _Literal(_Node):
    def __init__(self, value: int):
        self.value = value

    def evaluate(self, params):
        return WittElem.from_int(self.value, params)


class _Generator(_Node):
    def evaluate(self, params):
        return WittElem.generator(params)


class _Power(_Node):
    def __init__(self, base: _Node, exponent: int):
        self.base = base
        self.exponent = exponent

    def evaluate(self, params):
        return self.base.evaluate(params) ** self.exponent


class _Sign(_Node):
    def __init__(self, sign: str, operand: _Node):
        self.sign = sign
        self.operand = operand

    def evaluate(self, params):
        value = self.operand.evaluate(params)
        return -value if self.sign == '-' else value


class _Product(_Node):
    def __init__(self, factors):
        self.factors = factors

    def evaluate(self, params):
        result = WittElem.one(params)
        for factor in self.factors:
            result = result * factor.evaluate(params)
        return result


class _Sum(_Node):
    def __init__(self, first: _Node, rest):
        self.first = first
        self.rest = rest

    def evaluate(self, params):
        result = self.first.evaluate(params)
        for op, term in self.rest:
            value = term.evaluate(params)
            result = result + value if op == '+' else result - value
        return result


def _power_action(tokens):
    if len(tokens) == 1:
        return tokens[0]
    return _Power(tokens[0], int(tokens[1]))


def _sign_action(tokens):
    sign, operand = tokens[0]
    return _Sign(sign, operand)


def _product_action(tokens):
    return _Product(list(tokens[0][::2]))


def _sum_action(tokens):
    items = tokens[0]
    return _Sum(items[0], [(items[i], items[i + 1]) for i in range(1, len(items), 2)])


@lru_cache(maxsize=None)
def _grammar() -> pp.ParserElement:
    expr = pp.Forward()
    integer = pp.Word(pp.nums).set_parse_action(lambda t: _Literal(int(t[0])))
    symbol = pp.Keyword('z').set_parse_action(lambda: _Generator())
    atom = integer | symbol | (pp.Suppress('(') + expr + pp.Suppress(')'))
    factor = (atom + pp.Optional(pp.Suppress('^') + pp.Word(pp.nums))).set_parse_action(_power_action)
    expr <<= pp.infix_notation(factor, [
        (pp.one_of('+ -'), 1, pp.OpAssoc.RIGHT, _sign_action),
        (pp.Literal('*'), 2, pp.OpAssoc.LEFT, _product_action),
        (pp.one_of('+ -'), 2, pp.OpAssoc.LEFT, _sum_action),
    ])
    return expr


def parse_elem(text: str, params: WittParams) -> WittElem:
    """
    Parse an expression such as "1+2*z", "z^2" or "-4-3*z^2" into an element of params' ring.
    Exponents at or above the rank are allowed and reduced by the modulus.
    """
    try:
        tree = _grammar().parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as e:
        raise ExpressionSyntaxError(f'cannot parse {text!r}: {e}') from e
    return tree.evaluate(params)
