"""Stateful HTTP session API used by the explorer UI.

Sessions live in memory with TTL eviction; the durable artifact is the
exported mutation word.  All mutation math happens here on the server --
clients only render payloads.  Mutations on one session are serialized by a
per-session lock, so concurrent requests see a total order.
"""

from __future__ import annotations

import threading
import time
import uuid
from dataclasses import dataclass, field
from typing import Optional

from fastapi import Body, FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware

from grassdt import dt, grassmann
from grassdt.quiver import IceQuiver, QuiverError
from grassdt.tracking import (
    TrackedSeed,
    initial_tracked,
    matrix_to_json,
    mutate_tracked,
)

DEFAULT_TTL_SECONDS = 3600.0
FPOLY_AUTO_LIMIT = 12  # track F-polynomials by default up to a 3x4 grid


@dataclass
class Session:
    id: str
    seed: TrackedSeed
    undo_stack: list[TrackedSeed]
    created_at: float
    last_access: float
    preset: Optional[dict]
    lock: threading.Lock = field(default_factory=threading.Lock)


class SessionStore:
    def __init__(self, ttl_seconds: float = DEFAULT_TTL_SECONDS, clock=time.monotonic):
        self.ttl = ttl_seconds
        self.clock = clock
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def _evict_expired(self, now: float) -> None:
        dead = [sid for sid, s in self._sessions.items() if now - s.last_access > self.ttl]
        for sid in dead:
            del self._sessions[sid]

    def create(self, seed: TrackedSeed, preset: Optional[dict]) -> Session:
        now = self.clock()
        session = Session(
            id=uuid.uuid4().hex[:12],
            seed=seed,
            undo_stack=[seed],
            created_at=now,
            last_access=now,
            preset=preset,
        )
        with self._lock:
            self._evict_expired(now)
            self._sessions[session.id] = session
        return session

    def get(self, session_id: str) -> Session:
        now = self.clock()
        with self._lock:
            self._evict_expired(now)
            session = self._sessions.get(session_id)
            if session is None:
                raise HTTPException(status_code=404, detail="unknown session")
            session.last_access = now
            return session


def session_payload(session: Session) -> dict:
    seed = session.seed
    r, m = seed.num_mutable, seed.num_vertices
    colors = list(seed.colors()) + ["frozen"] * (m - r)
    all_red = all(c == "red" for c in seed.colors()) if r else False
    sigma = dt.extract_sigma(seed) if all_red else None
    return {
        "id": session.id,
        "preset": session.preset,
        "quiver": seed.quiver.to_json_dict(),
        "colors": colors,
        "g_matrix": matrix_to_json(seed.gmatrix),
        "c_matrix": matrix_to_json(seed.cmatrix),
        "f_polys": [f.to_text() for f in seed.fpolys] if seed.fpolys is not None else None,
        "history": list(seed.history),
        "all_red": all_red,
        "sigma": list(sigma) if sigma else None,
        "undo_depth": len(seed.history),
    }


def create_app(ttl_seconds: float = DEFAULT_TTL_SECONDS, clock=time.monotonic) -> FastAPI:
    app = FastAPI(title="grassdt session service")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    store = SessionStore(ttl_seconds=ttl_seconds, clock=clock)
    app.state.store = store

    @app.post("/sessions")
    def create_session(body: dict = Body(...)):
        preset = None
        if "quiver" in body:
            try:
                quiver = IceQuiver.from_json_dict(body["quiver"])
            except QuiverError as exc:
                raise HTTPException(status_code=400, detail=str(exc))
        elif "k" in body and "n" in body:
            try:
                k, n = int(body["k"]), int(body["n"])
                quiver = grassmann.grid_quiver(k, n)
            except (TypeError, ValueError) as exc:
                raise HTTPException(status_code=400, detail=str(exc))
            preset = {"k": k, "n": n}
        else:
            raise HTTPException(
                status_code=400, detail="body needs either {k, n} or {quiver}"
            )
        track = body.get("track_fpolys")
        if track is None:
            track = quiver.num_mutable <= FPOLY_AUTO_LIMIT
        session = store.create(initial_tracked(quiver, track_fpolys=bool(track)), preset)
        return session_payload(session)

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        session = store.get(session_id)
        with session.lock:
            return session_payload(session)

    @app.post("/sessions/{session_id}/mutate")
    def mutate_session(session_id: str, body: dict = Body(...)):
        session = store.get(session_id)
        try:
            vertex = int(body["vertex"])
        except (KeyError, TypeError, ValueError):
            raise HTTPException(status_code=400, detail="body needs an integer 'vertex'")
        with session.lock:
            quiver = session.seed.quiver
            if not 1 <= vertex <= quiver.num_vertices:
                raise HTTPException(status_code=400, detail="vertex out of range")
            if not quiver.is_mutable(vertex):
                raise HTTPException(status_code=409, detail="vertex is frozen")
            session.seed = mutate_tracked(session.seed, vertex)
            session.undo_stack.append(session.seed)
            return session_payload(session)

    @app.post("/sessions/{session_id}/undo")
    def undo_session(session_id: str):
        session = store.get(session_id)
        with session.lock:
            undone = len(session.undo_stack) > 1
            if undone:
                session.undo_stack.pop()
                session.seed = session.undo_stack[-1]
            payload = session_payload(session)
            payload["undone"] = undone
            return payload

    @app.get("/sessions/{session_id}/word")
    def export_word(session_id: str):
        session = store.get(session_id)
        with session.lock:
            word = list(session.seed.history)
        return {
            "id": session_id,
            "word": word,
            "cli": "grassdt mutate --quiver quiver.json --word "
            + (",".join(map(str, word)) if word else "''"),
        }

    @app.get("/dtf")
    def dtf_endpoint(k: int, n: int, p: int, q: int):
        try:
            box = dt.weng_box(k, n, p, q)
            poly = dt.dtf_closed_form(k, n, p, q)
        except (ValueError, dt.BoxTooLargeError) as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return {
            "vertex": [p, q],
            "box": list(box),
            "terms": len(poly),
            "poly": poly.to_text(),
        }

    @app.get("/gvector")
    def gvector_endpoint(k: int, n: int, index: str):
        try:
            plucker = grassmann.PluckerIndex.parse(index, k, n)
            seed = grassmann.triangular_seed(k, n)
            vec = grassmann.g_vector_plucker(plucker)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return {
            "k": k,
            "n": n,
            "index": plucker.to_text(),
            "gvector": list(vec),
            "support": [
                {
                    "id": i + 1,
                    "vertex": seed.vertex(i + 1).to_text(),
                    "plucker": seed.plucker(i + 1).to_text(),
                    "coeff": c,
                }
                for i, c in enumerate(vec)
                if c
            ],
        }

    return app


app = create_app()
