class ActionError(Exception):
    pass


class ResidueDegreeError(ActionError, ValueError):
    """The residue field degree f does not meet the hypothesis of the requested computation"""
    pass


class ResidueDegreeParityError(ResidueDegreeError):
    def __init__(self, f: int, what: str):
        super().__init__(f'{what} needs an odd residue degree f, got f={f}')
        self.f = f


class OracleMismatchError(ActionError):
    """Two independent computations of the same coefficient disagree"""
    pass


class IntegralityError(ActionError, ArithmeticError):
    pass


class UnknownMethodError(ActionError, ValueError):
    def __init__(self, name: str, known):
        super().__init__(f'unknown action method {name!r}, expected one of {", ".join(sorted(known))}')
        self.name = name
