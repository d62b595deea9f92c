from .params import WittParams, make_params, residue_polynomial, CONWAY_POLYNOMIALS
from .element import WittElem, format_elem
from .scaled import ScaledWitt
from .expression import parse_elem
from .errors import (WittError, InvalidParamsError, ParamsMismatchError, NonUnitError, NotDivisibleError,
                     ExpressionSyntaxError)
