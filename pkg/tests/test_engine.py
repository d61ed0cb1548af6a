import math
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wythoff import _solver_py
from wythoff.engine import (
    GameSpec,
    Move,
    apply_move,
    beatty_p_positions,
    canonical_spec,
    classic_spec,
    legal_moves,
    solve_box,
    verify_p_set,
)
from wythoff.errors import BudgetExceededError, DimensionMismatchError, IllegalMoveError

from conftest import brute_p_set, brute_successors, xor_all


def small_specs():
    def build(n):
        coords = st.tuples(*[st.integers(0, 2)] * n).filter(any)
        return st.frozensets(coords, min_size=1, max_size=4).map(
            lambda vs: GameSpec(n, tuple(sorted(vs)))
        )

    return st.integers(1, 3).flatmap(build)


def small_positions(n, top=6):
    return st.tuples(*[st.integers(0, top)] * n)


# --- move vectors and legality ---------------------------------------------


def test_canonical_spec_shape():
    spec = canonical_spec(3)
    assert spec.vectors == ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1))
    assert classic_spec().vectors == ((1, 0), (0, 1), (1, 1))


def test_spec_validation():
    with pytest.raises(ValueError):
        GameSpec(2, ())
    with pytest.raises(ValueError):
        GameSpec(2, ((0, 0),))
    with pytest.raises(ValueError):
        GameSpec(2, ((1, 0), (1, 0)))
    with pytest.raises(DimensionMismatchError):
        GameSpec(2, ((1, 0, 0),))


def test_spec_json_round_trip():
    spec = canonical_spec(3)
    assert GameSpec.from_json(spec.to_json()) == spec
    assert spec.to_json() == (
        '{"n": 3, "vectors": [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]}'
    )


def test_legal_moves_examples(canonical3):
    assert legal_moves(canonical3, (0, 0, 0)) == []
    assert legal_moves(canonical3, (1, 0, 0)) == [Move((1, 0, 0), 1)]
    assert legal_moves(canonical3, (1, 1, 1)) == [
        Move((1, 0, 0), 1),
        Move((0, 1, 0), 1),
        Move((0, 0, 1), 1),
        Move((1, 1, 1), 1),
    ]


def test_legal_moves_dimension_mismatch(canonical3):
    with pytest.raises(DimensionMismatchError):
        legal_moves(canonical3, (1, 2))


def test_apply_move_examples():
    assert apply_move((5, 3, 2), Move((1, 1, 1), 2)) == (3, 1, 0)
    assert apply_move((7, 5, 6), Move((1, 0, 0), 4)) == (3, 5, 6)
    with pytest.raises(IllegalMoveError):
        apply_move((1, 0), Move((0, 1), 1))


def test_move_multiplier_must_be_positive():
    with pytest.raises(IllegalMoveError):
        Move((1, 0), 0)


@given(small_specs(), st.data())
def test_generated_moves_never_error(spec, data):
    pos = data.draw(small_positions(spec.n))
    for move in legal_moves(spec, pos):
        result = apply_move(pos, move)
        assert all(c >= 0 for c in result)


# --- retrograde solver ------------------------------------------------------


def test_solve_box_classic_known_verdicts():
    table = solve_box(classic_spec(), 3)
    assert table.verdict((1, 2)) == "P"
    assert table.verdict((2, 2)) == "N"


def test_solve_box_canonical3_bound2(canonical3):
    table = solve_box(canonical3, 2)
    assert set(table.p_positions()) == {(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)}


def test_solve_box_single_even_vector():
    spec = GameSpec(2, ((2, 2),))
    table = solve_box(spec, 2)
    assert set(table.p_positions()) == {(0, 0), (0, 1), (1, 0), (1, 1)}


def test_solve_box_rejects_oversized_boxes(canonical3):
    with pytest.raises(BudgetExceededError):
        solve_box(canonical3, 2000)
    with pytest.raises(BudgetExceededError):
        solve_box(canonical3, 4, max_cells=63)


def test_budget_env_override(canonical3, monkeypatch):
    monkeypatch.setenv("WYTHOFF_MAX_CELLS", "8")
    with pytest.raises(BudgetExceededError):
        solve_box(canonical3, 3)
    solve_box(canonical3, 2)


@settings(max_examples=60, deadline=None)
@given(small_specs(), st.integers(1, 5))
def test_solver_matches_brute_force(spec, bound):
    table = solve_box(spec, bound)
    assert set(table.p_positions()) == brute_p_set(spec, bound)


@settings(max_examples=40, deadline=None)
@given(small_specs(), st.integers(1, 5))
def test_table_satisfies_the_fixed_point(spec, bound):
    table = solve_box(spec, bound)
    for pos in table.positions():
        successor_verdicts = [table.is_p(s) for s in brute_successors(spec, pos)]
        assert table.is_p(pos) == (not any(successor_verdicts))


def test_both_kernels_agree(canonical3):
    for spec, bound in [(canonical3, 6), (classic_spec(), 9), (GameSpec(2, ((2, 2),)), 5)]:
        cells = bound**spec.n
        reference = bytearray((cells + 7) >> 3)
        _solver_py.solve_into_bits(spec.n, bound, spec.vectors, reference)
        assert solve_box(spec, bound).bits == bytes(reference)


def test_table_csv_export():
    table = solve_box(classic_spec(), 2)
    assert table.to_csv() == (
        "x1,x2,verdict\n"
        "0,0,P\n"
        "0,1,N\n"
        "1,0,N\n"
        "1,1,N\n"
    )


# --- candidate-set verification ---------------------------------------------


def nim_zero_box(n, bound):
    return {p for p in product(range(bound), repeat=n) if xor_all(p) == 0}


def test_verify_accepts_the_true_p_set(canonical3):
    result = verify_p_set(canonical3, nim_zero_box(3, 16), 16)
    assert result.valid
    assert result.violation is None


def test_verify_rejects_nim_zero_for_the_classic_game():
    result = verify_p_set(classic_spec(), nim_zero_box(2, 4), 4)
    assert not result.valid
    assert result.violation.position == (1, 1)
    assert result.violation.kind == "move-into-candidate"
    assert result.violation.move == Move((1, 1), 1)
    assert "reaches candidate (0, 0)" in result.violation.describe()


def test_verify_rejects_empty_candidate_at_origin(canonical3):
    result = verify_p_set(canonical3, set(), 1)
    assert not result.valid
    assert result.violation.position == (0, 0, 0)
    assert result.violation.kind == "no-move-into-candidate"


def test_verify_rejects_out_of_box_candidates(canonical3):
    with pytest.raises(ValueError):
        verify_p_set(canonical3, {(4, 4, 0)}, 4)


@settings(max_examples=30, deadline=None)
@given(small_specs(), st.integers(1, 5))
def test_solver_p_sets_always_verify(spec, bound):
    table = solve_box(spec, bound)
    assert verify_p_set(spec, set(table.p_positions()), bound).valid


# --- Beatty pairs ------------------------------------------------------------


def test_beatty_examples():
    assert beatty_p_positions(1) == [(0, 0)]
    assert beatty_p_positions(6) == [(0, 0), (1, 2), (2, 1), (3, 5), (5, 3)]
    eleven = set(beatty_p_positions(11))
    assert {(4, 7), (7, 4), (6, 10), (10, 6)} <= eleven
    assert eleven == set(beatty_p_positions(6)) | {(4, 7), (7, 4), (6, 10), (10, 6)}


def test_beatty_matches_solver():
    table = solve_box(classic_spec(), 11)
    assert set(beatty_p_positions(11)) == set(table.p_positions())


def test_floor_of_k_phi_is_exact():
    # a = floor(k*phi) iff a <= k*phi < a+1 iff (2a-k)^2 <= 5k^2 < (2a+2-k)^2,
    # all in integers; this checks the isqrt identity with no floats at all
    for k in range(0, 20000):
        a = (k + math.isqrt(5 * k * k)) // 2
        assert (2 * a - k) ** 2 <= 5 * k * k < (2 * a + 2 - k) ** 2


def test_beatty_sequences_are_complementary_prefix():
    pairs = beatty_p_positions(40)
    lower = sorted(a for a, b in pairs if a <= b)
    # the lower Beatty sequence hits every natural exactly once together with
    # the upper one (complementarity): spot-check the prefix
    upper = sorted(b for a, b in pairs if a < b)
    assert lower == [0, 1, 3, 4, 6, 8, 9, 11, 12, 14, 16, 17, 19, 21, 22, 24]
    assert upper[:10] == [2, 5, 7, 10, 13, 15, 18, 20, 23, 26]
