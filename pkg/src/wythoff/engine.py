"""General n-heap invariant-game model and exhaustive solver.

A game is a finite set of move vectors; a legal move subtracts a positive
integer multiple of one vector from the position, componentwise.  The solver
classifies every position of a bounded box by retrograde analysis, entirely
independent of the nim-sum oracle, so the two can be checked against each
other.  Also hosts the candidate-set verifier and the Beatty-pair generator
for the classic two-heap game.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from ._kernel import BACKEND_NAME, solve_into_bits
from .errors import BudgetExceededError, DimensionMismatchError, IllegalMoveError

Position = tuple[int, ...]

DEFAULT_MAX_CELLS = 1 << 24
_MAX_CELLS_ENV = "WYTHOFF_MAX_CELLS"


def max_cells_budget() -> int:
    """Cell budget for box-shaped computations, from the environment."""
    raw = os.environ.get(_MAX_CELLS_ENV)
    if raw is None:
        return DEFAULT_MAX_CELLS
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{_MAX_CELLS_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{_MAX_CELLS_ENV} must be >= 1, got {value}")
    return value


@dataclass(frozen=True)
class Move:
    """A move vector together with its positive multiplier."""

    vector: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise IllegalMoveError(f"move multiplier must be >= 1, got {self.k}")

    def delta(self) -> tuple[int, ...]:
        return tuple(self.k * c for c in self.vector)


@dataclass(frozen=True)
class GameSpec:
    """Dimension n plus a duplicate-free set of nonzero move vectors."""

    n: int
    vectors: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"dimension must be >= 1, got {self.n}")
        if not self.vectors:
            raise ValueError("move vector set must be nonempty")
        seen = set()
        for v in self.vectors:
            if len(v) != self.n:
                raise DimensionMismatchError(
                    f"vector {v} has dimension {len(v)}, expected {self.n}"
                )
            if any(c < 0 for c in v):
                raise ValueError(f"vector {v} has negative components")
            if not any(v):
                raise ValueError("the zero vector is not a move vector")
            if v in seen:
                raise ValueError(f"duplicate move vector {v}")
            seen.add(v)

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "vectors": [list(v) for v in self.vectors]})

    @classmethod
    def from_json(cls, text: str) -> GameSpec:
        data = json.loads(text)
        return cls(int(data["n"]), tuple(tuple(int(c) for c in v) for v in data["vectors"]))


def canonical_spec(n: int) -> GameSpec:
    """The n unit vectors plus the all-ones diagonal (n >= 2)."""
    if n < 2:
        raise ValueError(f"canonical move set needs n >= 2, got {n}")
    units = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    return GameSpec(n, units + ((1,) * n,))


def classic_spec() -> GameSpec:
    """The classic two-heap game: {(1,0), (0,1), (1,1)}."""
    return canonical_spec(2)


def _check_dimension(spec: GameSpec, pos: Position) -> None:
    if len(pos) != spec.n:
        raise DimensionMismatchError(
            f"position {pos} has dimension {len(pos)}, spec expects {spec.n}"
        )
    if any(c < 0 for c in pos):
        raise ValueError(f"position {pos} has negative components")


def max_multiplier(vector: tuple[int, ...], pos: Position) -> int:
    """Largest k with pos - k*vector componentwise >= 0 (0 when none)."""
    return min(pos[i] // c for i, c in enumerate(vector) if c > 0)


def legal_moves(spec: GameSpec, pos: Position) -> list[Move]:
    """All legal moves at pos, vectors in spec order, multipliers ascending."""
    _check_dimension(spec, pos)
    moves = []
    for v in spec.vectors:
        for k in range(1, max_multiplier(v, pos) + 1):
            moves.append(Move(v, k))
    return moves


def apply_move(pos: Position, move: Move) -> Position:
    """Subtract k*vector from pos; raises if any heap would go negative."""
    if len(move.vector) != len(pos):
        raise DimensionMismatchError(
            f"move vector {move.vector} does not match position {pos}"
        )
    result = tuple(x - move.k * c for x, c in zip(pos, move.vector))
    if any(x < 0 for x in result):
        raise IllegalMoveError(f"move {move} is not legal at {pos}")
    return result


@dataclass(frozen=True)
class VerdictTable:
    """P/N classification of every position in [0, bound)^n.

    Stored as a flat bit array in row-major order (last coordinate fastest),
    one bit per cell, set = P.  Immutable once built.
    """

    spec: GameSpec
    bound: int
    bits: bytes

    def index(self, pos: Position) -> int:
        _check_dimension(self.spec, pos)
        if any(c >= self.bound for c in pos):
            raise ValueError(f"position {pos} outside box [0,{self.bound})^{self.spec.n}")
        idx = 0
        for c in pos:
            idx = idx * self.bound + c
        return idx

    def is_p(self, pos: Position) -> bool:
        idx = self.index(pos)
        return bool(self.bits[idx >> 3] >> (idx & 7) & 1)

    def verdict(self, pos: Position) -> str:
        return "P" if self.is_p(pos) else "N"

    def positions(self) -> Iterator[Position]:
        """All box positions in lexicographic order."""
        n, bound = self.spec.n, self.bound
        pos = [0] * n
        for _ in range(bound**n):
            yield tuple(pos)
            for i in range(n - 1, -1, -1):
                pos[i] += 1
                if pos[i] < bound:
                    break
                pos[i] = 0

    def p_positions(self) -> list[Position]:
        return [pos for pos in self.positions() if self.is_p(pos)]

    def to_csv(self) -> str:
        """Header x1,...,xn,verdict; rows in lexicographic order."""
        header = ",".join(f"x{i + 1}" for i in range(self.spec.n)) + ",verdict"
        rows = [header]
        for pos in self.positions():
            rows.append(",".join(map(str, pos)) + "," + self.verdict(pos))
        return "\n".join(rows) + "\n"


def solve_box(spec: GameSpec, bound: int, max_cells: int | None = None) -> VerdictTable:
    """Retrograde analysis of the box [0, bound)^n.

    A position is P iff it has no legal move into a P-position; in particular
    every terminal position is P.  Refuses boxes above the cell budget rather
    than truncating.
    """
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    budget = max_cells_budget() if max_cells is None else max_cells
    cells = bound**spec.n
    if cells > budget:
        raise BudgetExceededError(
            f"box [0,{bound})^{spec.n} has {cells} cells, exceeding the budget "
            f"of {budget} (raise {_MAX_CELLS_ENV} to allow more)"
        )
    bits = bytearray((cells + 7) >> 3)
    solve_into_bits(spec.n, bound, spec.vectors, bits)
    return VerdictTable(spec, bound, bytes(bits))


def solver_backend() -> str:
    """Name of the kernel in use ("cython" or "python")."""
    return BACKEND_NAME


@dataclass(frozen=True)
class Violation:
    """First offending position found by verify_p_set."""

    position: Position
    kind: str  # "move-into-candidate" | "no-move-into-candidate"
    move: Move | None

    def describe(self) -> str:
        if self.kind == "move-into-candidate":
            assert self.move is not None
            return (
                f"{self.position} is in the candidate set but move "
                f"{self.move.vector} x{self.move.k} reaches candidate "
                f"{apply_move(self.position, self.move)}"
            )
        return f"{self.position} is outside the candidate set but has no move into it"


@dataclass(frozen=True)
class VerificationResult:
    valid: bool
    violation: Violation | None = None
    # positions whose only possible witnesses would lie outside the box; for
    # subtraction moves this stays empty (moves never leave the box), kept for
    # contract completeness
    unverifiable: tuple[Position, ...] = field(default=())


def verify_p_set(
    spec: GameSpec, candidate: Iterable[Position], bound: int
) -> VerificationResult:
    """Check the two P-set conditions for a candidate set on [0, bound)^n.

    (i) no move from a candidate position may land in the candidate set;
    (ii) every non-candidate position must have some move into it.
    Scans positions lexicographically and reports the first violation.
    """
    cand = set()
    for pos in candidate:
        _check_dimension(spec, pos)
        if any(c >= bound for c in pos):
            raise ValueError(f"candidate {pos} outside box [0,{bound})^{spec.n}")
        cand.add(tuple(pos))

    n = spec.n
    pos = [0] * n
    for _ in range(bound**n):
        p = tuple(pos)
        if p in cand:
            for move in legal_moves(spec, p):
                if apply_move(p, move) in cand:
                    return VerificationResult(
                        False, Violation(p, "move-into-candidate", move)
                    )
        else:
            if not any(apply_move(p, m) in cand for m in legal_moves(spec, p)):
                return VerificationResult(
                    False, Violation(p, "no-move-into-candidate", None)
                )
        for i in range(n - 1, -1, -1):
            pos[i] += 1
            if pos[i] < bound:
                break
            pos[i] = 0
    return VerificationResult(True)


def _floor_k_phi(k: int) -> int:
    # floor(k*phi) = floor((k + sqrt(5*k^2)) / 2), exact in integers
    return (k + math.isqrt(5 * k * k)) // 2


def beatty_p_positions(limit: int) -> list[Position]:
    """All pairs (floor(k*phi), floor(k*phi^2)) and swaps with both
    coordinates < limit, k >= 0, sorted; no floating point involved."""
    if limit < 0:
        raise ValueError(f"limit must be >= 0, got {limit}")
    out: set[Position] = set()
    k = 0
    while True:
        a = _floor_k_phi(k)
        if a >= limit:
            break
        b = a + k  # floor(k*phi^2) = floor(k*phi) + k since phi^2 = phi + 1
        if b < limit:
            out.add((a, b))
            out.add((b, a))
        k += 1
    return sorted(out)
