from __future__ import annotations

from typing import List, Optional

from numpy.random import Generator, PCG64

from witt import WittElem, WittParams


class RandomElements:
    """
    A source of random Witt ring and group elements.

    Coordinates are drawn digit by digit in base p, so any precision is reachable regardless of the
    64 bit limit of numpy integers. Use spawn to get independent streams for worker threads.
    """

    def __init__(self, seed: Optional[int] = None, bit_generator: Optional[PCG64] = None):
        """
        :param seed: an optional seed for the prng.
        :param bit_generator: an explicit PCG64 stream, overrides seed.
        """
        self._bit_generator = bit_generator if bit_generator is not None else PCG64(seed)
        self._rng = Generator(self._bit_generator)

    def spawn(self, count: int) -> List[RandomElements]:
        """count independent sources; each will be used by a different thread, so each gets a jumped prng"""
        streams = []
        bit_generator = self._bit_generator
        for _ in range(count):
            bit_generator = bit_generator.jumped()
            streams.append(RandomElements(bit_generator=bit_generator))
        return streams

    def integer(self, low: int, high: int) -> int:
        return int(self._rng.integers(low, high))

    def _coordinate(self, p: int, N: int, first_digit_nonzero: bool = False) -> int:
        digits = self._rng.integers(0, p, size=N)
        if first_digit_nonzero:
            digits[0] = self._rng.integers(1, p)
        value = 0
        for digit in reversed(digits.tolist()):
            value = value * p + digit
        return value

    def witt(self, params: WittParams) -> WittElem:
        return WittElem([self._coordinate(params.p, params.N) for _ in range(params.d)], params)

    def unit(self, params: WittParams) -> WittElem:
        """A uniformly random unit: residues that vanish mod p are rejected"""
        while True:
            elem = self.witt(params)
            if elem.is_unit():
                return elem

    def prime_subring_unit(self, params: WittParams) -> WittElem:
        return WittElem.from_int(self._coordinate(params.p, params.N, first_digit_nonzero=True), params)

    def group_element(self, params: WittParams, witt_only: bool = False):
        """alpha0 + alpha1*S with alpha0 a random unit and alpha1 random (zero when witt_only)"""
        from stabilizer.group import GroupElem
        alpha1 = WittElem.zero(params) if witt_only else self.witt(params)
        return GroupElem(self.unit(params), alpha1)
