"""HTTP API over the oracle, solver, and sponge modules.

Serves JSON to the web UI and to scripts.  Game sessions live in an in-memory
store with per-session locking and idle expiry; the engine answers the human
move synchronously inside the same request (the oracle is O(n), nothing to
queue).  Positions travel as arrays of integers, moves as
``{"vector": [...], "k": int}``.
"""

from __future__ import annotations

import threading
import time
import uuid
from dataclasses import dataclass, field

from fastapi import FastAPI, HTTPException, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import Response

from .bits import nim_sum
from .engine import GameSpec, Move, Position, apply_move, canonical_spec, legal_moves
from .errors import BudgetExceededError, IllegalMoveError, OracleDomainError
from .oracle import all_winning_moves, winning_move
from .sponge import export_points, generate_level

SESSION_TTL_SECONDS = 30 * 60

HUMAN = "human"
ENGINE = "engine"


@dataclass
class GameSession:
    id: str
    spec: GameSpec
    start: Position
    current: Position
    history: list[tuple[str, Move, Position]] = field(default_factory=list)
    status: str = "human-to-move"  # or "engine-to-move" / "finished"
    winner: str | None = None
    lock: threading.Lock = field(default_factory=threading.Lock)
    last_access: float = field(default_factory=time.monotonic)

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "n": self.spec.n,
            "start": list(self.start),
            "position": list(self.current),
            "status": self.status,
            "winner": self.winner,
            "history": [
                {
                    "mover": mover,
                    "move": {"vector": list(move.vector), "k": move.k},
                    "position": list(pos),
                }
                for mover, move, pos in self.history
            ],
        }


class SessionStore:
    """Thread-safe id -> session map with lazy idle expiry."""

    def __init__(self, ttl: float = SESSION_TTL_SECONDS) -> None:
        self._ttl = ttl
        self._sessions: dict[str, GameSession] = {}
        self._lock = threading.Lock()

    def _purge(self) -> None:
        now = time.monotonic()
        stale = [k for k, s in self._sessions.items() if now - s.last_access > self._ttl]
        for k in stale:
            del self._sessions[k]

    def add(self, session: GameSession) -> None:
        with self._lock:
            self._purge()
            self._sessions[session.id] = session

    def get(self, session_id: str) -> GameSession:
        with self._lock:
            self._purge()
            session = self._sessions.get(session_id)
            if session is None:
                raise HTTPException(status_code=404, detail="unknown session")
            session.last_access = time.monotonic()
            return session


def _engine_ply(session: GameSession) -> None:
    """Engine moves: the winning move when one exists, else the first legal
    move.  Caller holds the session lock and has checked the game is live."""
    pos = session.current
    moves = legal_moves(session.spec, pos)
    if not moves:  # engine is the mover with no legal move: engine loses
        session.status = "finished"
        session.winner = HUMAN
        return
    if nim_sum(pos) != 0:
        move = winning_move(pos)
        result = apply_move(pos, move)
        assert nim_sum(result) == 0, "engine reply must restore nim-sum zero"
    else:
        move = moves[0]
        result = apply_move(pos, move)
    session.current = result
    session.history.append((ENGINE, move, result))
    if legal_moves(session.spec, result):
        session.status = "human-to-move"
    else:  # human now faces a terminal position and loses
        session.status = "finished"
        session.winner = ENGINE


def _parse_position(raw: str) -> Position:
    try:
        pos = tuple(int(part) for part in raw.split(","))
    except ValueError:
        raise HTTPException(status_code=400, detail=f"malformed position {raw!r}")
    if any(c < 0 for c in pos):
        raise HTTPException(status_code=400, detail="heap sizes must be >= 0")
    return pos


def _require_odd_dimension(n: int) -> None:
    if n < 3 or n % 2 == 0:
        raise HTTPException(
            status_code=422, detail=f"oracle undefined for dimension n={n}"
        )


def create_app(
    session_ttl: float = SESSION_TTL_SECONDS,
    max_points: int | None = None,
    ui_dir: str | None = None,
) -> FastAPI:
    app = FastAPI(title="wythoff")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    store = SessionStore(ttl=session_ttl)
    sponge_cache: dict[tuple[int, int], bytes] = {}

    @app.get("/api/verdict")
    def verdict(pos: str) -> dict:
        position = _parse_position(pos)
        _require_odd_dimension(len(position))
        s = nim_sum(position)
        return {"is_p": s == 0, "nim_sum": s}

    @app.post("/api/session")
    async def create_session(request: Request) -> dict:
        try:
            body = await request.json()
        except Exception:
            raise HTTPException(status_code=400, detail="malformed JSON body")
        if not isinstance(body, dict):
            raise HTTPException(status_code=400, detail="body must be an object")
        try:
            n = int(body["n"])
            start = tuple(int(c) for c in body["start"])
            human_first = bool(body["human_first"])
        except (KeyError, TypeError, ValueError):
            raise HTTPException(
                status_code=400, detail="body needs n, start, human_first"
            )
        if len(start) != n or any(c < 0 for c in start):
            raise HTTPException(status_code=400, detail="start must be n naturals")
        _require_odd_dimension(n)
        session = GameSession(
            id=uuid.uuid4().hex, spec=canonical_spec(n), start=start, current=start
        )
        with session.lock:
            if not legal_moves(session.spec, start):
                # terminal start: whoever is to move has already lost
                session.status = "finished"
                session.winner = ENGINE if human_first else HUMAN
            elif human_first:
                session.status = "human-to-move"
            else:
                session.status = "engine-to-move"
                _engine_ply(session)
            store.add(session)
            return session.to_json()

    @app.post("/api/session/{session_id}/move")
    async def play_move(session_id: str, request: Request) -> dict:
        try:
            body = await request.json()
        except Exception:
            raise HTTPException(status_code=400, detail="malformed JSON body")
        try:
            vector = tuple(int(c) for c in body["vector"])
            k = int(body["k"])
        except (KeyError, TypeError, ValueError):
            raise HTTPException(status_code=400, detail="body needs vector and k")
        session = store.get(session_id)
        with session.lock:
            if session.status != "human-to-move":
                raise HTTPException(status_code=409, detail="not the human's turn")
            if vector not in session.spec.vectors:
                raise HTTPException(
                    status_code=422, detail=f"{list(vector)} is not a move vector"
                )
            try:
                move = Move(vector, k)
                result = apply_move(session.current, move)
            except IllegalMoveError as exc:
                raise HTTPException(status_code=422, detail=str(exc))
            session.current = result
            session.history.append((HUMAN, move, result))
            if legal_moves(session.spec, result):
                session.status = "engine-to-move"
                _engine_ply(session)
            else:  # engine has no reply: human made the last move and wins
                session.status = "finished"
                session.winner = HUMAN
            return session.to_json()

    @app.get("/api/session/{session_id}")
    def get_session(session_id: str) -> dict:
        session = store.get(session_id)
        with session.lock:
            return session.to_json()

    @app.get("/api/session/{session_id}/hints")
    def hints(session_id: str) -> list[dict]:
        session = store.get(session_id)
        with session.lock:
            moves = all_winning_moves(session.spec, session.current)
        return [{"vector": list(m.vector), "k": m.k} for m in moves]

    @app.get("/api/sponge")
    def sponge(n: int, m: int) -> Response:
        _require_odd_dimension(n)
        if m < 0:
            raise HTTPException(status_code=400, detail="m must be >= 0")
        key = (n, m)
        payload = sponge_cache.get(key)
        if payload is None:
            try:
                level = generate_level(n, m, max_points=max_points)
            except BudgetExceededError as exc:
                raise HTTPException(status_code=413, detail=str(exc))
            except OracleDomainError as exc:
                raise HTTPException(status_code=422, detail=str(exc))
            payload = export_points(level, "json")
            sponge_cache[key] = payload
        return Response(content=payload, media_type="application/json")

    if ui_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
