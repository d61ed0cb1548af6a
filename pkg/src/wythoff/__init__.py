"""n-heap Wythoff game engine, P-position oracle, and sponge toolkit."""

from .bits import bit, highest_discrepancy_bit, nim_sum
from .engine import (
    GameSpec,
    Move,
    Position,
    VerdictTable,
    apply_move,
    beatty_p_positions,
    canonical_spec,
    classic_spec,
    legal_moves,
    solve_box,
    solver_backend,
    verify_p_set,
)
from .errors import (
    BudgetExceededError,
    DimensionMismatchError,
    IllegalMoveError,
    OracleDomainError,
    WythoffError,
)
from .oracle import all_winning_moves, is_p_position, winning_move
from .sponge import (
    DyadicPoint,
    SpongeLevel,
    TSet,
    box_count,
    decompose,
    dimension_slope,
    export_points,
    generate_level,
    ifs_check,
    q_membership,
    scale,
    t_set,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "DimensionMismatchError",
    "DyadicPoint",
    "GameSpec",
    "IllegalMoveError",
    "Move",
    "OracleDomainError",
    "Position",
    "SpongeLevel",
    "TSet",
    "VerdictTable",
    "WythoffError",
    "all_winning_moves",
    "apply_move",
    "beatty_p_positions",
    "bit",
    "box_count",
    "canonical_spec",
    "classic_spec",
    "decompose",
    "dimension_slope",
    "export_points",
    "generate_level",
    "highest_discrepancy_bit",
    "ifs_check",
    "is_p_position",
    "legal_moves",
    "nim_sum",
    "q_membership",
    "scale",
    "solve_box",
    "solver_backend",
    "t_set",
    "verify_p_set",
    "winning_move",
]
