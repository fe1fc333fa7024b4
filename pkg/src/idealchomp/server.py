"""JSON API over the play engine.

Games live in an in-memory store; mutations on one game are serialized
by a per-game lock, and solver tables are shared through the catalog's
algebra cache.
"""

from __future__ import annotations

import threading
import uuid

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .algebra import NotLocal
from .catalog import CharMismatch, UnknownRing, all_entries, build_algebra, parse_ring_descriptor
from .game import IllegalMove, PlaySession, apply_move, best_move, hint, new_session
from .parser import ParseError


class NewGameBody(BaseModel):
    ring_id: str
    field: int
    engine_side: str | None = None


class MoveBody(BaseModel):
    poly: str


def _error(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"code": code, "message": message})


def _state_json(session: PlaySession) -> dict:
    A = session.algebra
    rows = session.state.ideal.rows
    quotient_rank = A.rank - len(rows)
    d_vector = None
    if session.status == "open":
        quotient = A if not rows else A.quotient_by(session.state.ideal)[0]
        try:
            d_vector = list(quotient.d_vector())
        except NotLocal:
            d_vector = None
    return {
        "ring_id": session.ring_id,
        "field": A.p,
        "engine_side": session.engine_side,
        "ideal_basis": [A.render_coords(r) for r in rows],
        "quotient_rank": quotient_rank,
        "d_vector_of_quotient": d_vector,
        "turn": session.to_move if session.status == "open" else None,
        "status": session.status,
        "loser": session.loser,
        "history": session.state.history,
    }


def create_app(static_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="idealchomp")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    store: dict[str, tuple[PlaySession, threading.Lock]] = {}
    store_lock = threading.Lock()

    def _get(game_id: str) -> tuple[PlaySession, threading.Lock] | None:
        with store_lock:
            return store.get(game_id)

    @app.get("/catalog")
    def catalog() -> dict:
        return {
            "entries": [
                {
                    "id": e.id,
                    "n": e.n,
                    "d": list(e.d),
                    "presentation": e.presentation(),
                    "char": e.char,
                    "win": e.win,
                }
                for e in all_entries()
            ]
        }

    @app.post("/games")
    def create_game(body: NewGameBody):
        engine_side = body.engine_side
        if engine_side in ("none", ""):
            engine_side = None
        if engine_side not in (None, "A", "B"):
            return _error(400, "bad_engine_side", "engine_side must be A, B, or none")
        try:
            if body.ring_id.startswith("K["):
                algebra = parse_ring_descriptor(body.ring_id, body.field)
            else:
                algebra = build_algebra(body.ring_id, body.field)
        except UnknownRing:
            return _error(404, "unknown_ring", f"no catalog entry {body.ring_id!r}")
        except CharMismatch as exc:
            return _error(400, "char_mismatch", str(exc))
        except (ParseError, ValueError) as exc:
            return _error(400, "bad_ring", str(exc))
        session = new_session(algebra, engine_side, body.ring_id)
        engine_move = None
        if engine_side == "A":
            choice = best_move(session)
            apply_move(session, choice.element)
            engine_move = choice.element.render()
        game_id = uuid.uuid4().hex[:12]
        with store_lock:
            store[game_id] = (session, threading.Lock())
        return {"game_id": game_id, "state": _state_json(session), "engine_move": engine_move}

    @app.get("/games/{game_id}")
    def get_game(game_id: str):
        found = _get(game_id)
        if found is None:
            return _error(404, "unknown_game", f"no game {game_id!r}")
        session, lock = found
        with lock:
            return {"game_id": game_id, "state": _state_json(session)}

    @app.post("/games/{game_id}/moves")
    def post_move(game_id: str, body: MoveBody):
        found = _get(game_id)
        if found is None:
            return _error(404, "unknown_game", f"no game {game_id!r}")
        session, lock = found
        with lock:
            if session.status != "open":
                return _error(409, "game_over", "the game is already over")
            if session.engine_side == session.to_move:
                return _error(409, "not_your_turn", "the engine is to move")
            try:
                element = session.algebra.parse_element(body.poly)
            except ParseError as exc:
                return _error(400, "parse_error", str(exc))
            try:
                outcome = apply_move(session, element)
            except IllegalMove as exc:
                return _error(400, "illegal_move", str(exc))
            engine_move = None
            engine_resigned = None
            if not outcome.ended and session.engine_side == session.to_move:
                choice = best_move(session)
                apply_move(session, choice.element)
                engine_move = choice.element.render()
                engine_resigned = choice.resign
            return {
                "game_id": game_id,
                "state": _state_json(session),
                "was_unit": outcome.was_unit,
                "engine_move": engine_move,
                "engine_resigned": engine_resigned,
            }

    @app.get("/games/{game_id}/hint")
    def get_hint(game_id: str):
        found = _get(game_id)
        if found is None:
            return _error(404, "unknown_game", f"no game {game_id!r}")
        session, lock = found
        with lock:
            if session.status != "open":
                return _error(409, "game_over", "the game is already over")
            move = hint(session)
        if move is None:
            return {"hint": None, "message": "position lost"}
        return {"hint": move.render()}

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
