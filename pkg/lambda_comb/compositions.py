from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Tuple


@dataclass(frozen=True)
class IntComposition:
    """
    An ordered sequence of integers summing to a total.

    Attributes:
        entries: positive integers, or nonnegative ones when weak
        weak: whether zero entries are allowed
    """
    entries: Tuple[int, ...]
    weak: bool = False

    def __post_init__(self):
        lowest = 0 if self.weak else 1
        if any(e < lowest for e in self.entries):
            raise ValueError(f'{self.entries} is not a {"weak " if self.weak else ""}composition')

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    @property
    def total(self) -> int:
        return sum(self.entries)


def _weak(total: int, length: int) -> Iterator[Tuple[int, ...]]:
    if length == 0:
        if total == 0:
            yield ()
        return
    if length == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _weak(total - first, length - 1):
            yield (first,) + rest


def enumerate_weak_compositions(total: int, length: int) -> Iterator[IntComposition]:
    """Every weak composition of total into exactly length parts, lexicographically"""
    for entries in _weak(total, length):
        yield IntComposition(entries, weak=True)


def _bounded(total: int, below: Optional[int], length: Optional[int]) -> Iterator[Tuple[int, ...]]:
    if total == 0:
        if not length:
            yield ()
        return
    if length == 0:
        return
    top = total if below is None else min(total, below - 1)
    for first in range(1, top + 1):
        for rest in _bounded(total - first, below, None if length is None else length - 1):
            yield (first,) + rest


def enumerate_compositions(total: int, entries_below: Optional[int] = None) -> Iterator[IntComposition]:
    """Every composition of total with all entries < entries_below, lexicographically"""
    for entries in _bounded(total, entries_below, None):
        yield IntComposition(entries)


def fixed_length_compositions(total: int, length: int, entries_below: Optional[int] = None) \
        -> Iterator[IntComposition]:
    for entries in _bounded(total, entries_below, length):
        yield IntComposition(entries)
