class TreeError(Exception):
    """Base class for labelled tree errors"""


class EnumerationCeilingExceeded(TreeError, RuntimeError):
    """Brute-force enumeration produced more trees than the configured ceiling"""

    def __init__(self, q: int, weight: int, ceiling: int):
        super().__init__(f'enumerating q={q} trees of weight {weight} exceeds the ceiling of {ceiling} trees')
        self.q = q
        self.weight = weight
        self.ceiling = ceiling
