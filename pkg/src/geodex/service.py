"""HTTP game service: create sessions, play moves, ask for analysis.

Sessions live in memory with an idle TTL. Every mutation of one session
happens under that session's lock, so concurrent requests cannot
interleave half-applied moves. Engine work is synchronous and bounded by
a per-request time budget; blowing the budget yields a 503, never a
stuck worker.
"""

from __future__ import annotations

import threading
import time
import uuid
from dataclasses import dataclass, field
from typing import Literal

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from .engine import (
    IllegalMoveError,
    OptimalPlay,
    Position,
    SearchDeadlineExceeded,
    analyze,
    apply_move,
    best_move,
    is_terminal,
    legal_moves,
)
from .families import named_graph
from .graphs import CapacityError, Graph, GraphError, closure, parse_graph

ENGINE = "engine"
HUMAN = "human"


class FamilyParams(BaseModel):
    name: str
    n: int | None = None
    m: int | None = None
    dims: list[int] | None = None
    seed: int = 0


class CreateGameRequest(BaseModel):
    family: FamilyParams | None = None
    text: str | None = None
    n: int | None = None
    edges: list[tuple[int, int]] | None = None
    mode: Literal["two-human", "vs-engine"] = "two-human"
    engine_first: bool = False


class MoveRequest(BaseModel):
    vertex: int = Field(ge=0)


@dataclass
class Session:
    id: str
    graph: Graph
    mode: str
    engine_first: bool
    history: list[int] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)
    last_access: float = field(default_factory=time.monotonic)

    def touch(self) -> None:
        self.last_access = time.monotonic()

    def position(self) -> Position:
        p = Position(self.graph)
        for v in self.history:
            p = apply_move(p, v)
        return p

    def players(self) -> tuple[str, str]:
        if self.mode == "two-human":
            return ("first", "second")
        if self.engine_first:
            return (ENGINE, HUMAN)
        return (HUMAN, ENGINE)


def _build_graph(req: CreateGameRequest) -> Graph:
    sources = [req.family is not None, req.text is not None,
               req.edges is not None or req.n is not None]
    if sum(sources) != 1:
        raise HTTPException(
            status_code=422,
            detail="provide exactly one of: family, text, or n with edges")
    try:
        if req.family is not None:
            fam = req.family
            return named_graph(fam.name, n=fam.n, m=fam.m, dims=fam.dims,
                               seed=fam.seed)
        if req.text is not None:
            return parse_graph(req.text)
        if req.n is None or req.edges is None:
            raise HTTPException(status_code=422,
                                detail="explicit graphs need n and edges")
        return Graph.from_edges(req.n, req.edges)
    except (GraphError, CapacityError) as exc:
        raise HTTPException(status_code=422, detail=str(exc))


def create_app(session_ttl: float = 3600.0,
               time_budget: float = 10.0) -> FastAPI:
    app = FastAPI(title="geodex game service")
    # the browser client is served from its own origin (any static file
    # server will do), so answer preflights for everyone
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])
    sessions: dict[str, Session] = {}
    store_lock = threading.Lock()

    def _purge() -> None:
        cutoff = time.monotonic() - session_ttl
        with store_lock:
            dead = [sid for sid, s in sessions.items()
                    if s.last_access < cutoff]
            for sid in dead:
                del sessions[sid]

    def _get(session_id: str) -> Session:
        _purge()
        with store_lock:
            sess = sessions.get(session_id)
        if sess is None:
            raise HTTPException(status_code=404,
                                detail=f"no session {session_id}")
        sess.touch()
        return sess

    def _deadline() -> float:
        return time.monotonic() + time_budget

    def _state(sess: Session) -> dict:
        p = sess.position()
        selected = p.selected.members()
        cl = closure(p.graph, p.graph.intervals, p.selected)
        covered = sorted(set(cl.members()) - set(selected))
        legal = legal_moves(p).members()
        terminal = is_terminal(p)
        players = sess.players()
        to_move = None if terminal else players[len(sess.history) % 2]
        winner = None
        if terminal and sess.history:
            winner = players[(len(sess.history) - 1) % 2]
        return {
            "id": sess.id,
            "mode": sess.mode,
            "engine_first": sess.engine_first,
            "history": list(sess.history),
            "n": p.graph.n,
            "edges": [[u, v] for u, v in p.graph.edges()],
            "selected": selected,
            "covered": covered,
            "legal": legal,
            "to_move": to_move,
            "terminal": terminal,
            "winner": winner,
        }

    def _engine_reply(sess: Session) -> int | None:
        """Make the engine's move if it is the engine's turn. Returns the
        vertex it chose, or None when it has nothing to do."""
        p = sess.position()
        if is_terminal(p):
            return None
        if sess.players()[len(sess.history) % 2] != ENGINE:
            return None
        try:
            v = best_move(p, OptimalPlay(), deadline=_deadline())
        except SearchDeadlineExceeded:
            raise HTTPException(status_code=503,
                                detail="engine ran out of time")
        assert v is not None
        sess.history.append(v)
        return v

    @app.post("/games", status_code=201)
    def create_game(req: CreateGameRequest) -> dict:
        g = _build_graph(req)
        sess = Session(id=uuid.uuid4().hex, graph=g, mode=req.mode,
                       engine_first=req.engine_first and
                       req.mode == "vs-engine")
        with sess.lock:
            engine_move = None
            if sess.mode == "vs-engine" and sess.engine_first:
                engine_move = _engine_reply(sess)
            _purge()
            with store_lock:
                sessions[sess.id] = sess
            payload = _state(sess)
            if engine_move is not None:
                payload["engine_move"] = engine_move
            return payload

    @app.get("/games/{session_id}")
    def get_game(session_id: str) -> dict:
        sess = _get(session_id)
        with sess.lock:
            return _state(sess)

    @app.post("/games/{session_id}/moves")
    def post_move(session_id: str, req: MoveRequest) -> dict:
        sess = _get(session_id)
        with sess.lock:
            p = sess.position()
            if (sess.mode == "vs-engine" and not is_terminal(p)
                    and sess.players()[len(sess.history) % 2] == ENGINE):
                raise HTTPException(status_code=409,
                                    detail="it is the engine's turn")
            try:
                apply_move(p, req.vertex)
            except IllegalMoveError as exc:
                raise HTTPException(status_code=409, detail=str(exc))
            sess.history.append(req.vertex)
            engine_move = None
            if sess.mode == "vs-engine":
                engine_move = _engine_reply(sess)
            payload = _state(sess)
            payload["engine_move"] = engine_move
            return payload

    @app.get("/games/{session_id}/analysis")
    def get_analysis(session_id: str) -> dict:
        sess = _get(session_id)
        with sess.lock:
            p = sess.position()
        try:
            report = analyze(p, deadline=_deadline())
        except SearchDeadlineExceeded:
            raise HTTPException(status_code=503,
                                detail="analysis ran out of time")
        return {
            "grundy": report.grundy,
            "outcome": report.outcome.value,
            "options": [{"vertex": v, "grundy": g}
                        for v, g in report.options],
            "best_move": report.best_move,
        }

    @app.delete("/games/{session_id}", status_code=204)
    def delete_game(session_id: str) -> None:
        with store_lock:
            if session_id not in sessions:
                raise HTTPException(status_code=404,
                                    detail=f"no session {session_id}")
            del sessions[session_id]

    return app


app = create_app()
