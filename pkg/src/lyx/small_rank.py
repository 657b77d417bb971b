"""Static rank / select / pred / succ over a small set of 64-bit integers.

A sorted array with binary search stands in for a fusion tree: the sets
used by the index hold O(log n) elements, where both give a constant number
of word operations in practice.
"""
from __future__ import annotations

from bisect import bisect_left
from typing import Iterable

from .errors import InvalidArguments, InvalidRange

WORD_MAX = (1 << 64) - 1


class SmallSet:
    __slots__ = ("elements", "payload")

    def __init__(self, values: Iterable[int] = (), payload: dict | None = None):
        elems = sorted(set(values))
        if elems and (elems[0] < 0 or elems[-1] > WORD_MAX):
            raise InvalidArguments("values must fit in 64 bits")
        self.elements = elems
        self.payload = [payload[v] for v in elems] if payload is not None else None

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        e = self.elements
        i = bisect_left(e, x)
        return i < len(e) and e[i] == x

    def rank(self, x: int) -> int:
        """Number of elements strictly smaller than x."""
        return bisect_left(self.elements, x)

    def select(self, r: int) -> int:
        if not 0 <= r < len(self.elements):
            raise InvalidRange(f"select({r}) on a set of size {len(self.elements)}")
        return self.elements[r]

    def pred(self, x: int):
        """Largest element < x, or None."""
        i = bisect_left(self.elements, x)
        return self.elements[i - 1] if i else None

    def succ(self, x: int):
        """Smallest element >= x, or None."""
        e = self.elements
        i = bisect_left(e, x)
        return e[i] if i < len(e) else None

    def pred_index(self, x: int) -> int:
        """Index of pred(x) or -1."""
        return bisect_left(self.elements, x) - 1

    def succ_index(self, x: int) -> int:
        """Index of succ(x) or len(self)."""
        return bisect_left(self.elements, x)

    def payload_at(self, i: int):
        return self.payload[i]


def build_small_set(values: Iterable[int], payload: dict | None = None) -> SmallSet:
    return SmallSet(values, payload)
