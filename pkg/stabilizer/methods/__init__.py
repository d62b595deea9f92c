from .abstract_method import ActionMethod
from .recursive import RecursiveMethod
from .trees import TreesMethod
from .functional import FunctionalMethod
from .witt_alt import WittAlternatingMethod
