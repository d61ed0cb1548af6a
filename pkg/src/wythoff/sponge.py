"""Discrete Sierpinski sponge machinery.

The level-m point set holds every position with coordinates below 2^m and
nim-sum zero.  It is generated recursively: each level is the union of
2^(n-1) translated copies of the previous one, one per even-weight 0-1 vector.
Scaling a level by 2^-m gives an exact dyadic point set in [0,1)^n; the
closure-membership test and the self-similarity check operate on those.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Literal, Sequence

from .bits import nim_sum
from .engine import Position, max_cells_budget
from .errors import BudgetExceededError, DimensionMismatchError, OracleDomainError


def _check_odd(n: int) -> None:
    if n < 3 or n % 2 == 0:
        raise OracleDomainError(f"dimension must be odd and >= 3, got {n}")


@dataclass(frozen=True)
class TSet:
    """The 0-1 vectors of even weight: translation directions of the
    self-similar decomposition.  Always 2^(n-1) of them, zero included."""

    n: int
    vectors: tuple[tuple[int, ...], ...]


def t_set(n: int) -> TSet:
    """All 0-1 n-vectors whose digits XOR to zero, sorted."""
    _check_odd(n)
    vecs = tuple(v for v in product((0, 1), repeat=n) if sum(v) % 2 == 0)
    return TSet(n, vecs)


@dataclass(frozen=True)
class SpongeLevel:
    """The finite point set of one refinement level."""

    n: int
    m: int
    points: frozenset[Position]

    def __len__(self) -> int:
        return len(self.points)

    def sorted_points(self) -> list[Position]:
        return sorted(self.points)


def generate_level(n: int, m: int, max_points: int | None = None) -> SpongeLevel:
    """Build the level-m set recursively from level 0 (the origin).

    Each step lifts level j to level j+1 as the union of translates
    2^j * v + point over the even-weight 0-1 vectors v.  Cost is linear in the
    output, never in the 2^(mn) cells of the enclosing box.
    """
    _check_odd(n)
    if m < 0:
        raise ValueError(f"level must be >= 0, got {m}")
    budget = max_cells_budget() if max_points is None else max_points
    expected = 1 << (m * (n - 1))
    if expected > budget:
        raise BudgetExceededError(
            f"level (n={n}, m={m}) has {expected} points, exceeding the budget of {budget}"
        )
    tvecs = t_set(n).vectors
    points: set[Position] = {(0,) * n}
    for j in range(m):
        shift = 1 << j
        points = {
            tuple(x + shift * v for x, v in zip(p, vec))
            for vec in tvecs
            for p in points
        }
    return SpongeLevel(n, m, frozenset(points))


def decompose(level: SpongeLevel) -> dict[tuple[int, ...], SpongeLevel]:
    """Split a level by the top bit pattern of its points.

    Each point is keyed by its bit-(m-1) digits, an even-weight 0-1 vector;
    translating a part back by 2^(m-1) * key yields a copy of level m-1.
    Parts are pairwise disjoint by construction.
    """
    if level.m < 1:
        raise ValueError("level 0 has no decomposition")
    shift = level.m - 1
    parts: dict[tuple[int, ...], set[Position]] = {}
    for p in level.points:
        key = tuple((x >> shift) & 1 for x in p)
        parts.setdefault(key, set()).add(tuple(x - (k << shift) for x, k in zip(p, key)))
    return {
        key: SpongeLevel(level.n, level.m - 1, frozenset(pts))
        for key, pts in sorted(parts.items())
    }


@dataclass(frozen=True)
class DyadicPoint:
    """A point of [0,1]^n with coordinates a / 2^m, held exactly.

    Coordinates are Fractions restricted to power-of-two denominators, so set
    equality and hashing are exact; (numerator, level) views are available via
    :meth:`pairs`.
    """

    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        for c in self.coords:
            if c < 0 or c > 1:
                raise ValueError(f"coordinate {c} outside [0,1]")
            if c.denominator & (c.denominator - 1):
                raise ValueError(f"coordinate {c} is not dyadic")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> DyadicPoint:
        """Build from (numerator, level) pairs meaning numerator / 2^level."""
        return cls(tuple(Fraction(num, 1 << lev) for num, lev in pairs))

    def pairs(self) -> tuple[tuple[int, int], ...]:
        """Normalized (numerator, level) view; numerators odd or zero."""
        return tuple(
            (c.numerator, c.denominator.bit_length() - 1) for c in self.coords
        )

    def common_level(self) -> int:
        return max(c.denominator.bit_length() - 1 for c in self.coords)

    def numerators_at(self, level: int) -> tuple[int, ...]:
        out = []
        for c in self.coords:
            scaled = c * (1 << level)
            if scaled.denominator != 1:
                raise ValueError(f"coordinate {c} needs more than {level} digits")
            out.append(scaled.numerator)
        return tuple(out)


def scale(level: SpongeLevel) -> frozenset[DyadicPoint]:
    """Map every point x to x / 2^m, landing in [0,1)^n."""
    denom = 1 << level.m
    return frozenset(
        DyadicPoint(tuple(Fraction(x, denom) for x in p)) for p in level.points
    )


def q_membership(point: DyadicPoint) -> bool:
    """Closure-membership test for a dyadic point.

    True iff the coordinates admit binary expansions x_i = sum a_k(x_i) 2^-k
    whose digits XOR to zero at every position k >= 1.  A dyadic rational has
    at most two expansions: the terminating one and the one ending in all 1s
    (value 1 has only the latter, value 0 only the former), so the search
    ranges over at most 2^n choices.  With every coordinate written over the
    common level M, choosing the all-ones tail subtracts one from the
    numerator; a choice is accepted when the adjusted numerators XOR to zero
    (prefix digits cancel) and the number of all-ones tails is even (digits
    beyond M cancel).
    """
    n = len(point.coords)
    _check_odd(n)
    level = point.common_level()
    nums = point.numerators_at(level)
    top = 1 << level
    for tails in product((0, 1), repeat=n):
        if sum(tails) % 2 != 0:
            continue
        adjusted = []
        for num, tail in zip(nums, tails):
            num -= tail
            if num < 0 or num >= top:  # expansion does not exist for this coord
                break
            adjusted.append(num)
        else:
            if nim_sum(adjusted) == 0:
                return True
    return False


def ifs_check(level: SpongeLevel) -> bool:
    """Finite-level shadow of the self-similar fixed-point identity.

    Checks that scaling level m equals the union over even-weight 0-1 vectors
    v of (scaled level m-1 + v) / 2, as exact dyadic point sets.
    """
    if level.m < 1:
        raise ValueError("ifs_check needs m >= 1")
    prev = generate_level(level.n, level.m - 1)
    rhs = {
        DyadicPoint(tuple((c + v) / 2 for c, v in zip(p.coords, vec)))
        for vec in t_set(level.n).vectors
        for p in scale(prev)
    }
    return scale(level) == rhs


def box_count(levels: Sequence[SpongeLevel]) -> list[tuple[int, int]]:
    """(m, point count) pairs for levels sharing one dimension, sorted by m."""
    if not levels:
        return []
    n = levels[0].n
    for level in levels:
        if level.n != n:
            raise DimensionMismatchError("box_count levels must share a dimension")
    return sorted((level.m, len(level.points)) for level in levels)


def dimension_slope(m: int, count: int) -> int:
    """Exact log2(count) / m; raises unless count is a clean power."""
    if m < 1:
        raise ValueError("slope is defined only for m >= 1")
    log2c = count.bit_length() - 1
    if count != 1 << log2c or log2c % m != 0:
        raise ValueError(f"count {count} is not an exact power 2^(m*s) for m={m}")
    return log2c // m


ExportFormat = Literal["csv", "ply", "json"]


def export_points(level: SpongeLevel, format: ExportFormat) -> bytes:
    """Serialize a level; CSV and JSON for any n, PLY for n=3 only."""
    pts = level.sorted_points()
    if format == "csv":
        header = ",".join(f"x{i + 1}" for i in range(level.n))
        lines = [header] + [",".join(map(str, p)) for p in pts]
        return ("\n".join(lines) + "\n").encode()
    if format == "json":
        payload = {"n": level.n, "m": level.m, "points": [list(p) for p in pts]}
        return json.dumps(payload, separators=(",", ":")).encode()
    if format == "ply":
        if level.n != 3:
            raise ValueError(f"PLY export is 3-dimensional only, got n={level.n}")
        header = [
            "ply",
            "format ascii 1.0",
            f"element vertex {len(pts)}",
            "property float x",
            "property float y",
            "property float z",
            "end_header",
        ]
        lines = header + [" ".join(map(str, p)) for p in pts]
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown export format {format!r}")
