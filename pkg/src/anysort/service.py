"""HTTP session API: sort labeled items with a human (or any client) as the
comparison oracle.

Sessions are kept in memory, serialized per session, and optionally
snapshotted to JSON files on every write.  Items are addressed by index, so
duplicate labels are fine.  Estimates returned to clients always come from
the library's rho estimator over the session's comparison history; the
service adds no ranking logic of its own.
"""

from __future__ import annotations

import json
import secrets
import threading
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from .errors import InconsistentOrderError
from .order import OrderMatrix, compute_scores, score_and_sort
from .sorters import ALGORITHMS, Sorter, make_sorter

DEFAULT_MAX_ITEMS = 500
DEFAULT_TTL_SECONDS = 24 * 3600


class CreateSessionRequest(BaseModel):
    labels: list[str] = Field(min_length=1)
    algorithm: str = "corsort"


class AnswerRequest(BaseModel):
    pair: tuple[int, int]
    lesser: int


@dataclass
class Session:
    id: str
    labels: list[str]
    algorithm: str
    sorter: Sorter
    matrix: OrderMatrix
    created: float
    updated: float
    status: str = "active"  # active | interrupted | completed
    lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def pending(self) -> Optional[tuple[int, int]]:
        if self.status != "active":
            return None
        pair = self.sorter.peek_pair()
        return tuple(pair) if pair is not None else None

    def estimate_indices(self) -> list[int]:
        if self.sorter.state.matrix is not None:
            return self.sorter.rho_estimate()
        return score_and_sort(compute_scores(self.matrix).rho)

    def view(self) -> dict:
        pending = self.pending
        est = self.estimate_indices()
        return {
            "id": self.id,
            "labels": self.labels,
            "algorithm": self.algorithm,
            "status": self.status,
            "comparisons_done": self.sorter.comparisons_done,
            "pending": None
            if pending is None
            else {
                "pair": list(pending),
                "labels": [self.labels[pending[0]], self.labels[pending[1]]],
            },
            "estimate": [self.labels[i] for i in est],
            "estimate_indices": est,
        }

    def export(self) -> dict:
        return {
            "id": self.id,
            "labels": self.labels,
            "algorithm": self.algorithm,
            "status": self.status,
            "history": [[rec.lo, rec.hi] for rec in self.sorter.history],
            "estimate": [self.labels[i] for i in self.estimate_indices()],
        }


class SessionStore:
    """Thread-safe session table with lazy TTL expiry and JSON snapshots."""

    def __init__(
        self,
        snapshot_dir: Path | str | None = None,
        max_items: int = DEFAULT_MAX_ITEMS,
        ttl_seconds: float = DEFAULT_TTL_SECONDS,
    ):
        self.snapshot_dir = Path(snapshot_dir) if snapshot_dir else None
        if self.snapshot_dir:
            self.snapshot_dir.mkdir(parents=True, exist_ok=True)
        self.max_items = max_items
        self.ttl_seconds = ttl_seconds
        self._sessions: dict[str, Session] = {}
        self._table_lock = threading.Lock()

    def create(self, labels: Sequence[str], algorithm: str) -> Session:
        if len(labels) > self.max_items:
            raise HTTPException(422, f"at most {self.max_items} items per session")
        if algorithm not in ALGORITHMS:
            raise HTTPException(
                422, f"unknown algorithm {algorithm!r}; choose from {', '.join(ALGORITHMS)}"
            )
        n = len(labels)
        sorter = make_sorter(algorithm, n)
        now = time.time()
        session = Session(
            id=secrets.token_urlsafe(16),
            labels=list(labels),
            algorithm=algorithm,
            sorter=sorter,
            matrix=OrderMatrix(n),
            created=now,
            updated=now,
            status="completed" if sorter.done else "active",
        )
        with self._table_lock:
            self._expire_locked(now)
            self._sessions[session.id] = session
        self._snapshot(session)
        return session

    def get(self, session_id: str) -> Session:
        now = time.time()
        with self._table_lock:
            self._expire_locked(now)
            session = self._sessions.get(session_id)
        if session is None:
            raise HTTPException(404, "no such session (it may have expired)")
        return session

    def _expire_locked(self, now: float) -> None:
        stale = [
            sid
            for sid, s in self._sessions.items()
            if now - s.updated > self.ttl_seconds
        ]
        for sid in stale:
            del self._sessions[sid]

    def _snapshot(self, session: Session) -> None:
        if self.snapshot_dir is None:
            return
        path = self.snapshot_dir / f"{session.id}.json"
        path.write_text(json.dumps(session.export(), indent=2) + "\n")

    def touch(self, session: Session) -> None:
        session.updated = time.time()
        self._snapshot(session)


def create_app(
    snapshot_dir: Path | str | None = None,
    max_items: int = DEFAULT_MAX_ITEMS,
    ttl_seconds: float = DEFAULT_TTL_SECONDS,
) -> FastAPI:
    app = FastAPI(title="anysort", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    store = SessionStore(snapshot_dir, max_items, ttl_seconds)
    app.state.store = store

    def _require_active(session: Session) -> None:
        if session.status != "active":
            raise HTTPException(410, f"session is {session.status}")

    @app.post("/sessions", status_code=201)
    def create_session(body: CreateSessionRequest):
        return store.create(body.labels, body.algorithm).view()

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        session = store.get(session_id)
        with session.lock:
            return session.view()

    @app.post("/sessions/{session_id}/answer")
    def answer(session_id: str, body: AnswerRequest):
        session = store.get(session_id)
        with session.lock:
            _require_active(session)
            pending = session.pending
            if pending is None or tuple(body.pair) != pending:
                raise HTTPException(
                    409, f"pair {list(body.pair)} is not the pending pair"
                )
            if body.lesser not in pending:
                raise HTTPException(409, "lesser index is not part of the pair")
            pair = session.sorter.next_pair()
            hi = pair.j if body.lesser == pair.i else pair.i
            try:
                # validate against everything answered so far before recording
                # (some schedules re-ask pairs whose relation is already implied)
                session.matrix.insert(body.lesser, hi)
            except InconsistentOrderError:
                session.sorter._awaiting = False
                raise HTTPException(
                    409, "answer contradicts an earlier comparison"
                ) from None
            session.sorter.record_outcome(pair, body.lesser)
            if session.sorter.done:
                session.status = "completed"
            store.touch(session)
            return session.view()

    @app.post("/sessions/{session_id}/interrupt")
    def interrupt(session_id: str):
        session = store.get(session_id)
        with session.lock:
            _require_active(session)
            session.status = "interrupted"
            store.touch(session)
            view = session.view()
            view["history"] = [[r.lo, r.hi] for r in session.sorter.history]
            return view

    @app.get("/sessions/{session_id}/estimate")
    def estimate(session_id: str):
        session = store.get(session_id)
        with session.lock:
            est = session.estimate_indices()
            return {
                "estimate": [session.labels[i] for i in est],
                "estimate_indices": est,
                "comparisons_done": session.sorter.comparisons_done,
                "status": session.status,
            }

    @app.get("/sessions/{session_id}/export")
    def export(session_id: str):
        session = store.get(session_id)
        with session.lock:
            return session.export()

    return app
