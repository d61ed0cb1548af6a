"""Shared brute-force oracles, deliberately independent of the package
internals: plain dict/set code, no bit tables, no recursion shortcuts."""

from __future__ import annotations

from functools import reduce
from itertools import product
from operator import xor

import pytest

from wythoff.engine import GameSpec


def xor_all(xs):
    return reduce(xor, xs, 0)


def brute_successors(spec: GameSpec, pos):
    """All positions reachable in one legal move, by direct enumeration."""
    out = []
    for v in spec.vectors:
        k = 1
        while all(x - k * c >= 0 for x, c in zip(pos, v)):
            out.append(tuple(x - k * c for x, c in zip(pos, v)))
            k += 1
    return out


def brute_p_set(spec: GameSpec, bound: int) -> set:
    """P-positions of the box by definition, visiting positions in
    coordinate-sum order so successors are always classified first."""
    verdict: dict[tuple, bool] = {}
    cells = sorted(product(range(bound), repeat=spec.n), key=lambda p: (sum(p), p))
    for pos in cells:
        verdict[pos] = not any(verdict[s] for s in brute_successors(spec, pos))
    return {pos for pos, is_p in verdict.items() if is_p}


def filter_level_points(n: int, m: int) -> set:
    """Level-m sponge points by filtering the full box on the XOR condition."""
    side = 1 << m
    return {p for p in product(range(side), repeat=n) if xor_all(p) == 0}


@pytest.fixture
def canonical3():
    from wythoff.engine import canonical_spec

    return canonical_spec(3)
