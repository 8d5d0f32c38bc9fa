"""HTTP session service for the interactive game.

State is a pure function of the initial board plus the move history, so
every session can be replayed; mutations are serialized per session.
Sessions live in memory and expire after an idle timeout.
"""

from __future__ import annotations

import os
import secrets
import threading
import time
from dataclasses import dataclass, field
from typing import Optional

from fastapi import FastAPI, HTTPException
from fastapi.staticfiles import StaticFiles

from . import fixtures
from .board import LampBoard, load_board
from .game import (
    GameInstance,
    apply_rcc,
    changeable,
    hint,
    ineffective_sets,
    new_game,
    solve_game,
)
from .gf2 import bits_to_indices
from .layout import board_layout
from .planar import DiagramError

SESSION_TTL = 24 * 3600.0


@dataclass
class Session:
    id: str
    game: GameInstance
    created: float
    updated: float
    lock: threading.Lock = field(default_factory=threading.Lock)


class SessionStore:
    def __init__(self, ttl: float = SESSION_TTL):
        self.ttl = ttl
        self._lock = threading.Lock()
        self._sessions: dict[str, Session] = {}

    def sweep(self) -> None:
        now = time.time()
        with self._lock:
            dead = [k for k, s in self._sessions.items() if now - s.updated > self.ttl]
            for k in dead:
                del self._sessions[k]

    def create(self, game: GameInstance) -> Session:
        self.sweep()
        sid = secrets.token_urlsafe(12)
        now = time.time()
        session = Session(id=sid, game=game, created=now, updated=now)
        with self._lock:
            self._sessions[sid] = session
        return session

    def get(self, sid: str) -> Session:
        self.sweep()
        with self._lock:
            s = self._sessions.get(sid)
        if s is None:
            raise HTTPException(status_code=404, detail={"code": "no_such_session"})
        return s

    def drop(self, sid: str) -> None:
        with self._lock:
            self._sessions.pop(sid, None)


def _board_payload(board: LampBoard) -> dict:
    return {
        "sites": list(board.site_labels),
        "regions": list(board.region_labels),
        "matrix": board.matrix.to_strings(),
        "layout": board_layout(board),
    }


def _state_payload(session: Session) -> dict:
    g = session.game
    return {
        "id": session.id,
        "lamps": [(g.lamps >> i) & 1 for i in range(g.board.site_count)],
        "history": list(g.history),
        "won": g.won,
    }


def _analysis_payload(game: GameInstance) -> dict:
    sol = solve_game(game)
    sites = []
    for i in range(game.board.site_count):
        yes, witness, cert = changeable(game, i)
        sites.append(
            {
                "site": game.board.site_labels[i],
                "changeable": yes,
                "witness": list(bits_to_indices(witness)) if witness is not None else None,
                "certificate": list(bits_to_indices(cert)) if cert is not None else None,
            }
        )
    return {
        "solvable": sol.solvable,
        "solution": list(sol.region_ids()) if sol.solvable else None,
        "certificate": list(bits_to_indices(sol.certificate))
        if sol.certificate is not None
        else None,
        "kernel_dimension": len(ineffective_sets(game)),
        "sites": sites,
    }


def _board_from_request(data: dict) -> LampBoard:
    if "catalog" in data:
        name = data["catalog"]
        if name not in fixtures.GAME_CATALOG:
            raise HTTPException(
                status_code=404,
                detail={"code": "no_such_board", "names": sorted(fixtures.GAME_CATALOG)},
            )
        return fixtures.GAME_CATALOG[name]()
    try:
        return load_board(data)
    except (DiagramError, KeyError, ValueError) as exc:
        raise HTTPException(status_code=422, detail={"code": "bad_board", "error": str(exc)})


def create_app(store: Optional[SessionStore] = None) -> FastAPI:
    app = FastAPI(title="regionselect")
    sessions = store or SessionStore()

    @app.get("/api/v1/catalog")
    def catalog():
        return {"boards": sorted(fixtures.GAME_CATALOG)}

    @app.post("/api/v1/session")
    def create_session(data: dict):
        board = _board_from_request(data)
        session = sessions.create(new_game(board))
        return {
            **_state_payload(session),
            "board": _board_payload(board),
        }

    @app.get("/api/v1/session/{sid}")
    def get_session(sid: str):
        session = sessions.get(sid)
        return {**_state_payload(session), "board": _board_payload(session.game.board)}

    @app.delete("/api/v1/session/{sid}")
    def delete_session(sid: str):
        sessions.drop(sid)
        return {"deleted": sid}

    @app.post("/api/v1/session/{sid}/move")
    def move(sid: str, data: dict):
        session = sessions.get(sid)
        if "region" not in data:
            raise HTTPException(status_code=422, detail={"code": "missing_region"})
        region = data["region"]
        with session.lock:
            if not isinstance(region, int) or not 0 <= region < session.game.board.region_count:
                raise HTTPException(status_code=422, detail={"code": "bad_region"})
            session.game = apply_rcc(session.game, region)
            session.updated = time.time()
            return _state_payload(session)

    @app.get("/api/v1/session/{sid}/hint")
    def get_hint(sid: str):
        session = sessions.get(sid)
        sol = solve_game(session.game)
        if not sol.solvable:
            return {
                "hint": None,
                "certificate": list(bits_to_indices(sol.certificate)),
            }
        return {"hint": hint(session.game), "solution": list(sol.region_ids())}

    @app.post("/api/v1/analyze")
    def analyze(data: dict):
        board = _board_from_request(data)
        return _analysis_payload(new_game(board))

    @app.get("/api/v1/analyze")
    def analyze_catalog(catalog: str):
        return _analysis_payload(new_game(_board_from_request({"catalog": catalog})))

    static_dir = os.environ.get("REGSEL_STATIC_DIR")
    if static_dir and os.path.isdir(static_dir):
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")
    return app
