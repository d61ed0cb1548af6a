"""Exact binary-digit arithmetic: digit extraction, Nim-sum, discrepancy bits.

Everything here is a pure function on non-negative Python ints.  Heap counts
in practice fit a 64-bit word (the compiled solver kernel assumes so), but the
operations themselves are exact at any width.
"""

from __future__ import annotations

from functools import reduce
from operator import xor
from typing import Iterable, Sequence


def bit(t: int, k: int) -> int:
    """Return the k-th binary digit of t (k = 0 is least significant)."""
    if t < 0:
        raise ValueError(f"natural expected, got {t}")
    if k < 0:
        raise ValueError(f"bit index must be >= 0, got {k}")
    return (t >> k) & 1


def nim_sum(xs: Iterable[int]) -> int:
    """Bitwise XOR of all values; raises on an empty sequence."""
    xs = tuple(xs)
    if not xs:
        raise ValueError("nim_sum requires at least one value")
    if any(x < 0 for x in xs):
        raise ValueError("nim_sum is defined on naturals only")
    return reduce(xor, xs)


def highest_discrepancy_bit(xs: Sequence[int]) -> int | None:
    """Largest k where the digit-wise XOR of xs is 1, or None if the
    nim-sum is zero."""
    s = nim_sum(xs)
    if s == 0:
        return None
    return s.bit_length() - 1
