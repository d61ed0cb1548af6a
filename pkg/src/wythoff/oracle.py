"""Constant-time P-position oracle for the canonical odd-n game.

For an odd number of heaps n >= 3 with the canonical move set (unit vectors
plus the diagonal), a position is P exactly when the nim-sum of its heaps is
zero, and from any other position a single-heap move restoring nim-sum zero
can be built directly from the binary digits.
"""

from __future__ import annotations

from .bits import bit, highest_discrepancy_bit, nim_sum
from .engine import GameSpec, Move, Position, apply_move, canonical_spec, legal_moves
from .errors import OracleDomainError


def _check_odd_dimension(n: int) -> None:
    if n < 3 or n % 2 == 0:
        raise OracleDomainError(
            f"oracle undefined for this dimension: n={n} (need odd n >= 3)"
        )


def is_p_position(pos: Position) -> bool:
    """True iff the nim-sum of the heaps is zero (odd n >= 3 only)."""
    _check_odd_dimension(len(pos))
    if any(c < 0 for c in pos):
        raise ValueError(f"position {pos} has negative components")
    return nim_sum(pos) == 0


def winning_move(pos: Position) -> Move:
    """Single-heap move to a nim-sum-zero position; errors on P-positions.

    Picks the highest bit k' where the digit-wise XOR is odd and the lowest
    heap i carrying that bit, then rewrites the digits of heap i at and below
    k' with the XOR of the other heaps.  The removed amount is always >= 1 and
    the resulting position has nim-sum zero.
    """
    _check_odd_dimension(len(pos))
    k_high = highest_discrepancy_bit(pos)
    if k_high is None:
        raise OracleDomainError(f"no winning move from P-position {pos}")
    i = next(i for i, x in enumerate(pos) if bit(x, k_high) == 1)
    others = nim_sum(pos[:i] + pos[i + 1 :])
    mask = (1 << (k_high + 1)) - 1
    target = (pos[i] & ~mask) | (others & mask)
    t = pos[i] - target
    vector = tuple(1 if j == i else 0 for j in range(len(pos)))
    return Move(vector, t)


def all_winning_moves(spec: GameSpec | None, pos: Position) -> list[Move]:
    """Every legal move whose result has nim-sum zero (diagonal included).

    ``spec`` must be the canonical move set for len(pos); pass None to use it
    implicitly.  Empty exactly when pos is a P-position.
    """
    n = len(pos)
    _check_odd_dimension(n)
    if spec is None:
        spec = canonical_spec(n)
    elif spec != canonical_spec(n):
        raise OracleDomainError(f"move set {spec.vectors} is not canonical for n={n}")
    return [m for m in legal_moves(spec, pos) if nim_sum(apply_move(pos, m)) == 0]
