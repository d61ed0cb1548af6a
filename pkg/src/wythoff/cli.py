"""Command-line front door.

Subcommands: verdict, move, solve, verify, verify-classic, sponge, decompose,
dimension, serve.  Query subcommands take ``--json`` for machine-readable
output.  Exit codes: 0 success/PASS, 1 FAIL, 2 usage or input error.
Positions are comma-separated decimals; the dimension is inferred from the
count.  ``WYTHOFF_MAX_CELLS`` caps box and sponge sizes (default 2^24).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .bits import nim_sum
from .engine import (
    GameSpec,
    beatty_p_positions,
    canonical_spec,
    classic_spec,
    solve_box,
)
from .errors import WythoffError
from .oracle import is_p_position, winning_move
from .sponge import decompose, dimension_slope, export_points, generate_level


def _parse_position(raw: str) -> tuple[int, ...]:
    try:
        pos = tuple(int(part) for part in raw.split(","))
    except ValueError:
        raise ValueError(f"malformed position {raw!r}: expected comma-separated integers")
    if any(c < 0 for c in pos):
        raise ValueError(f"malformed position {raw!r}: heap sizes must be >= 0")
    return pos


def _emit(payload: dict | list) -> None:
    print(json.dumps(payload, separators=(",", ":")))


def _cmd_verdict(args: argparse.Namespace) -> int:
    pos = _parse_position(args.pos)
    is_p = is_p_position(pos)
    if args.json:
        _emit({"pos": list(pos), "is_p": is_p, "nim_sum": nim_sum(pos)})
    else:
        print("P" if is_p else "N")
    return 0


def _cmd_move(args: argparse.Namespace) -> int:
    pos = _parse_position(args.pos)
    if is_p_position(pos):
        if args.json:
            _emit({"pos": list(pos), "is_p": True, "move": None})
        else:
            print("P-position")
        return 0
    move = winning_move(pos)
    heap = move.vector.index(1) + 1
    result = tuple(x - move.k * c for x, c in zip(pos, move.vector))
    if args.json:
        _emit(
            {
                "pos": list(pos),
                "is_p": False,
                "move": {"vector": list(move.vector), "k": move.k},
                "result": list(result),
            }
        )
    else:
        print(f"remove {move.k} from heap {heap} -> {','.join(map(str, result))}")
    return 0


def _load_spec(args: argparse.Namespace) -> GameSpec:
    if args.spec is not None:
        with open(args.spec, encoding="utf-8") as fh:
            return GameSpec.from_json(fh.read())
    if args.classic:
        return classic_spec()
    if args.n is not None:
        return canonical_spec(args.n)
    raise ValueError("one of --spec, --n, --classic is required")


def _cmd_solve(args: argparse.Namespace) -> int:
    spec = _load_spec(args)
    table = solve_box(spec, args.bound)
    csv = table.to_csv()
    if args.out is None:
        sys.stdout.write(csv)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(csv)
        cells = args.bound**spec.n
        print(f"wrote {args.out} ({cells} positions, {len(table.p_positions())} P)")
    return 0


def _report_verify(
    args: argparse.Namespace,
    checked: int,
    p_count: int,
    mismatch: tuple[tuple[int, ...], str, str] | None,
) -> int:
    if mismatch is None:
        if args.json:
            _emit({"status": "PASS", "checked": checked, "p_positions": p_count})
        else:
            print(f"PASS ({checked} positions matched, {p_count} P-positions)")
        return 0
    pos, got, expected = mismatch
    if args.json:
        _emit(
            {
                "status": "FAIL",
                "counterexample": list(pos),
                "solver": got,
                "reference": expected,
            }
        )
    else:
        coords = ",".join(map(str, pos))
        print(f"FAIL: counterexample at {coords}: solver={got} reference={expected}")
    return 1


def _cmd_verify(args: argparse.Namespace) -> int:
    is_p_position((0,) * args.n)  # validates the oracle dimension up front
    table = solve_box(canonical_spec(args.n), args.bound)
    p_count = 0
    for pos in table.positions():
        solver_p = table.is_p(pos)
        p_count += solver_p
        oracle_p = nim_sum(pos) == 0
        if solver_p != oracle_p:
            mismatch = (pos, "P" if solver_p else "N", "P" if oracle_p else "N")
            return _report_verify(args, args.bound**args.n, p_count, mismatch)
    return _report_verify(args, args.bound**args.n, p_count, None)


def _cmd_verify_classic(args: argparse.Namespace) -> int:
    table = solve_box(classic_spec(), args.bound)
    solver = set(table.p_positions())
    beatty = set(beatty_p_positions(args.bound))
    if solver == beatty:
        return _report_verify(args, args.bound**2, len(solver), None)
    pos = min(solver.symmetric_difference(beatty))
    got = "P" if pos in solver else "N"
    expected = "P" if pos in beatty else "N"
    return _report_verify(args, args.bound**2, len(solver), (pos, got, expected))


def _cmd_sponge(args: argparse.Namespace) -> int:
    level = generate_level(args.n, args.m)
    payload = export_points(level, args.format)
    if args.out is None:
        sys.stdout.buffer.write(payload)
    else:
        with open(args.out, "wb") as fh:
            fh.write(payload)
        print(f"wrote {args.out} ({len(level.points)} points)")
    return 0


def _cmd_decompose(args: argparse.Namespace) -> int:
    level = generate_level(args.n, args.m)
    parts = decompose(level)
    reference = generate_level(args.n, args.m - 1)
    rows = []
    reassembled: set[tuple[int, ...]] = set()
    total = 0
    for vec, part in parts.items():
        rows.append(
            {
                "v": list(vec),
                "size": len(part.points),
                "matches_previous_level": part.points == reference.points,
            }
        )
        total += len(part.points)
        shift = args.m - 1
        reassembled |= {
            tuple(x + (v << shift) for x, v in zip(p, vec)) for p in part.points
        }
    exact = reassembled == level.points and total == len(level.points)
    if args.json:
        _emit(
            {
                "n": args.n,
                "m": args.m,
                "points": len(level.points),
                "parts": rows,
                "partition_exact": exact,
            }
        )
    else:
        print(
            f"level m={args.m} (n={args.n}): {len(level.points)} points, "
            f"{len(parts)} parts"
        )
        for row in rows:
            v = ",".join(map(str, row["v"]))
            match = "yes" if row["matches_previous_level"] else "NO"
            print(
                f"v={v} size={row['size']} matches_level_{args.m - 1}={match}"
            )
        print(f"partition exact: {'yes' if exact else 'NO'}")
    return 0 if exact and all(r["matches_previous_level"] for r in rows) else 1


def _cmd_dimension(args: argparse.Namespace) -> int:
    levels = [generate_level(args.n, m) for m in range(args.max_m + 1)]
    rows = []
    for m, count in ((lvl.m, len(lvl.points)) for lvl in levels):
        slope = dimension_slope(m, count) if m >= 1 else None
        rows.append({"m": m, "count": count, "slope": slope})
    if args.json:
        _emit(rows)
    else:
        for row in rows:
            slope = "-" if row["slope"] is None else row["slope"]
            print(f"m={row['m']} count={row['count']} slope={slope}")
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    ui_dir = args.ui_dir or os.environ.get("WYTHOFF_UI_DIR")
    if ui_dir is not None and not os.path.isdir(ui_dir):
        raise ValueError(f"UI directory {ui_dir!r} does not exist")
    app = create_app(ui_dir=ui_dir)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wythoff",
        description="n-heap Wythoff game oracle, solver, and sponge toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verdict", help="P/N verdict for a position (odd n >= 3)")
    p.add_argument("--pos", required=True, help="comma-separated heap sizes")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verdict)

    p = sub.add_parser("move", help="winning move for a position, if any")
    p.add_argument("--pos", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_move)

    p = sub.add_parser("solve", help="retrograde analysis of a bounded box")
    p.add_argument("--spec", help="path to a game spec JSON file")
    p.add_argument("--n", type=int, help="use the canonical move set for n heaps")
    p.add_argument("--classic", action="store_true", help="use the 2-heap classic game")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--out", help="CSV output path (default: stdout)")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="check oracle vs solver on a box")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("verify-classic", help="check Beatty pairs vs solver")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify_classic)

    p = sub.add_parser("sponge", help="generate and export a sponge level")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--format", choices=("csv", "ply", "json"), default="csv")
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=_cmd_sponge)

    p = sub.add_parser("decompose", help="summarize the self-similar partition")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("dimension", help="point counts and exact dimension slope")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-m", type=int, required=True, dest="max_m")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_dimension)

    p = sub.add_parser("serve", help="launch the HTTP service")
    p.add_argument("--port", type=int, default=8080)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--ui-dir", help="static web UI directory to serve at /")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the message
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (WythoffError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
