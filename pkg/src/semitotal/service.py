"""HTTP session service for interactive reduction sessions.

Sessions are event-sourced: the server stores the initial coloring and the
applied move list; the current coloring is the replay of the moves up to
the history cursor, and undo/redo only move the cursor.  Every state
transition re-validates colorings server-side; the client is never trusted
with validity.  Mutating requests on one session are serialized by a
per-session lock; everything else is safe to run concurrently because
colorings are immutable values.

Error mapping: 400 malformed request, 404 unknown session or catalog key,
409 invalid or stale move (with the mismatch detail), 422 coloring uploads
that fail validation.
"""

from __future__ import annotations

import threading
import uuid
from dataclasses import dataclass, field
from typing import Optional

from fastapi import FastAPI, Request, Response

from . import catalog_io as cat
from . import serialize
from .coloring import (
    Coloring,
    ColoringError,
    apply_pattern,
    default_lacunar_stc,
    listing,
    validate,
)
from .dot import to_dot
from .graph import Graph, GraphError
from .kempe import (
    Budget,
    KempeError,
    Mcap,
    apply_move,
    flip_beta_edge,
    mcap_from_vertices,
    reduce as kempe_reduce,
    swap,
    trace_from_moves,
)


class ApiError(Exception):
    def __init__(self, status: int, message: str, detail=None):
        self.status = status
        self.message = message
        self.detail = detail
        super().__init__(message)


@dataclass
class Session:
    id: str
    key: Optional[str]
    graph: Graph
    initial: Coloring
    hamilton: Optional[list] = None
    moves: list = field(default_factory=list)  # ("swap", Mcap) | ("flip", int)
    cursor: int = 0
    lock: threading.Lock = field(default_factory=threading.Lock)

    def current(self) -> Coloring:
        mu = self.initial
        for move in self.moves[: self.cursor]:
            mu = apply_move(mu, move)
        return mu


def _json(payload, status: int = 200) -> Response:
    return Response(
        content=serialize.dumps(payload), status_code=status, media_type="application/json"
    )


def _state_payload(s: Session) -> dict:
    mu = s.current()
    name = s.graph.name or "G"
    from .coloring import beta_edges

    return {
        "id": s.id,
        "key": s.key,
        "graph": s.graph.to_json(),
        "hamilton": s.hamilton,
        "coloring": serialize.payload_coloring(mu, name),
        "listing": serialize.payload_listing(mu, name),
        "beta_edges": list(beta_edges(mu)),
        "validation": serialize.payload_validation(mu),
        "cursor": s.cursor,
        "total_steps": len(s.moves),
        "can_undo": s.cursor > 0,
        "can_redo": s.cursor < len(s.moves),
    }


def _step_payloads(s: Session) -> list[dict]:
    mu = s.initial
    out = []
    tr = trace_from_moves(mu, s.moves)
    for step in tr.steps:
        out.append(step.to_json())
    return out


def create_app(static_dir: Optional[str] = None, persist_dir: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="semitotal session service")
    sessions: dict[str, Session] = {}

    def persist(s: Session) -> None:
        if persist_dir is None:
            return
        import os

        os.makedirs(persist_dir, exist_ok=True)
        tr = trace_from_moves(s.initial, s.moves)
        payload = tr.to_json(s.graph.name)
        payload["cursor"] = s.cursor
        payload["key"] = s.key
        with open(os.path.join(persist_dir, f"{s.id}.json"), "w", encoding="utf-8") as fh:
            fh.write(serialize.dumps(payload))

    @app.exception_handler(ApiError)
    async def _api_error(_req: Request, exc: ApiError):
        body = {"error": exc.message}
        if exc.detail is not None:
            body["detail"] = exc.detail
        return Response(
            content=serialize.dumps(body), status_code=exc.status, media_type="application/json"
        )

    def get_session(sid: str) -> Session:
        s = sessions.get(sid)
        if s is None:
            raise ApiError(404, f"unknown session {sid}")
        return s

    @app.get("/catalog")
    def catalog_index():
        entries = {}
        for key in cat.catalog_keys():
            entry = cat.catalog(key)
            entries[key] = {
                "n": entry.graph.n,
                "m": entry.graph.m,
                "has_hamilton": entry.hamilton is not None,
                "has_pattern": entry.pattern is not None,
                "provenance": entry.provenance,
            }
        return _json({"keys": list(cat.catalog_keys()), "entries": entries})

    @app.post("/sessions", status_code=201)
    async def create_session(request: Request):
        try:
            body = await request.json()
        except Exception:
            raise ApiError(400, "request body must be JSON")
        if not isinstance(body, dict):
            raise ApiError(400, "request body must be an object")
        key = body.get("catalog")
        entry = None
        if key is not None:
            try:
                entry = cat.catalog(key)
            except cat.CatalogError as exc:
                raise ApiError(404, str(exc))
            graph = entry.graph
        elif isinstance(body.get("graph"), dict):
            try:
                graph = Graph.from_json(body["graph"])
            except (GraphError, KeyError) as exc:
                raise ApiError(400, f"bad graph: {exc}")
        else:
            raise ApiError(400, "need 'catalog' or 'graph'")

        pattern = body.get("pattern")
        try:
            if isinstance(body.get("coloring"), dict):
                mu = Coloring.from_json(body["coloring"], graph)
                rep = validate(mu)
                if not rep.is_stc:
                    raise ApiError(422, "uploaded coloring is not a valid STC",
                                   detail=rep.to_json())
            elif body.get("stored_coloring"):
                mu = cat.stored_coloring(body["stored_coloring"])
                if mu.graph.edges != graph.edges:
                    raise ApiError(400, "stored coloring does not match the graph")
            elif pattern in (None, "catalog"):
                if entry is None or entry.pattern is None:
                    raise ApiError(400, "graph has no stored pattern; send one")
                mu = entry.lacunar_stc()
            elif pattern == "default-lacunar":
                if entry is None or entry.hamilton is None:
                    raise ApiError(400, "graph has no stored cycle")
                mu = default_lacunar_stc(entry.hamilton)
            else:
                if entry is None or entry.hamilton is None:
                    raise ApiError(400, "graph has no stored cycle")
                mu = apply_pattern(entry.hamilton, pattern)
        except ColoringError as exc:
            raise ApiError(422, str(exc))
        sid = uuid.uuid4().hex[:12]
        ham = list(entry.hamilton.cycle) if entry is not None and entry.hamilton else None
        s = Session(id=sid, key=key, graph=graph, initial=mu, hamilton=ham)
        sessions[sid] = s
        persist(s)
        return _json({"session": _state_payload(s)}, status=201)

    @app.get("/sessions/{sid}")
    def session_state(sid: str):
        return _json({"session": _state_payload(get_session(sid))})

    @app.get("/sessions/{sid}/listing")
    def session_listing(sid: str):
        s = get_session(sid)
        return _json(serialize.payload_listing(s.current(), s.graph.name or "G"))

    @app.get("/sessions/{sid}/mcaps")
    def session_mcaps(sid: str, c0: Optional[str] = None, c1: Optional[str] = None):
        s = get_session(sid)
        pair = None
        if c0 is not None or c1 is not None:
            if c0 is None or c1 is None:
                raise ApiError(400, "c0 and c1 go together")
            try:
                pair = (int(c0), int(c1))
            except ValueError:
                raise ApiError(400, "c0 and c1 must be integers")
            if pair[0] == pair[1]:
                raise ApiError(400, "c0 and c1 must differ")
        try:
            return _json(serialize.payload_mcaps(s.current(), pair))
        except KempeError as exc:
            raise ApiError(409, str(exc))

    async def _mutate(sid: str, request: Request, fn):
        s = get_session(sid)
        try:
            body = await request.json()
        except Exception:
            raise ApiError(400, "request body must be JSON")
        with s.lock:
            fn(s, body if isinstance(body, dict) else {})
            persist(s)
            return _json({"session": _state_payload(s), "last_step": _last_step(s)})

    def _last_step(s: Session):
        if s.cursor == 0:
            return None
        tr = trace_from_moves(s.initial, s.moves[: s.cursor])
        return tr.steps[-1].to_json()

    @app.post("/sessions/{sid}/swap")
    async def session_swap(sid: str, request: Request):
        def fn(s: Session, body: dict):
            mu = s.current()
            colors = body.get("colors")
            if not (isinstance(colors, list) and len(colors) == 2):
                raise ApiError(400, "swap needs colors [c0, c1]")
            verts = body.get("vertices")
            if verts is None and isinstance(body.get("path"), list):
                verts = [idx for kind, idx in body["path"] if kind == "v"]
                # element-ref paths list endpoints only; rebuild interior from edges
                if len(verts) == 2 and len(body["path"]) > 3:
                    verts = _vertices_from_refs(mu, body["path"])
            if not isinstance(verts, list) or len(verts) < 2:
                raise ApiError(400, "swap needs the path vertices")
            try:
                path = mcap_from_vertices(mu, verts, colors[0], colors[1])
                nu = swap(mu, path)
            except (KempeError, GraphError) as exc:
                raise ApiError(409, "move rejected", detail=str(exc))
            del nu
            s.moves = s.moves[: s.cursor]
            s.moves.append(("swap", path))
            s.cursor += 1

        return await _mutate(sid, request, fn)

    def _vertices_from_refs(mu: Coloring, refs: list) -> list[int]:
        g = mu.graph
        verts = [refs[0][1]]
        for kind, idx in refs[1:-1]:
            if kind != "e":
                raise ApiError(400, "path must be vertex, edges..., vertex")
            u, v = g.edges[idx]
            verts.append(v if verts[-1] == u else u)
        last = refs[-1][1]
        if verts[-1] != last:
            verts.append(last)
        return verts

    @app.post("/sessions/{sid}/flip")
    async def session_flip(sid: str, request: Request):
        def fn(s: Session, body: dict):
            mu = s.current()
            edge = body.get("edge")
            if isinstance(edge, list) and len(edge) == 2:
                try:
                    ei = s.graph.edge_index(*edge)
                except GraphError as exc:
                    raise ApiError(400, str(exc))
            elif isinstance(edge, int):
                ei = edge
            else:
                raise ApiError(400, "flip needs an edge index or [u, v]")
            if not (0 <= ei < s.graph.m):
                raise ApiError(400, f"edge index {ei} out of range")
            try:
                flip_beta_edge(mu, ei)
            except KempeError as exc:
                raise ApiError(409, "move rejected", detail=str(exc))
            s.moves = s.moves[: s.cursor]
            s.moves.append(("flip", ei))
            s.cursor += 1

        return await _mutate(sid, request, fn)

    @app.post("/sessions/{sid}/undo")
    async def session_undo(sid: str, request: Request):
        def fn(s: Session, _body: dict):
            if s.cursor == 0:
                raise ApiError(409, "nothing to undo")
            s.cursor -= 1

        return await _mutate(sid, request, fn)

    @app.post("/sessions/{sid}/redo")
    async def session_redo(sid: str, request: Request):
        def fn(s: Session, _body: dict):
            if s.cursor >= len(s.moves):
                raise ApiError(409, "nothing to redo")
            s.cursor += 1

        return await _mutate(sid, request, fn)

    @app.post("/sessions/{sid}/auto")
    async def session_auto(sid: str, request: Request):
        s = get_session(sid)
        try:
            body = await request.json()
        except Exception:
            body = {}
        goal = (body.get("goal") or "equitable_tc").replace("-", "_")
        budget = body.get("budget") or {}
        with s.lock:
            mu = s.current()
            try:
                tr = kempe_reduce(
                    mu,
                    goal,
                    Budget(
                        nodes=int(budget.get("nodes", 100000)),
                        steps=budget.get("steps"),
                    ),
                    seed=int(body.get("seed", 0)),
                )
            except KempeError as exc:
                raise ApiError(400, str(exc))
            s.moves = s.moves[: s.cursor]
            for step in tr.steps:
                if step.kind == "swap":
                    s.moves.append(("swap", step.path))
                else:
                    s.moves.append(("flip", step.edge))
            s.cursor = len(s.moves)
            persist(s)
            return _json(
                {
                    "session": _state_payload(s),
                    "goal_reached": tr.goal_reached,
                    "applied_steps": [st.to_json() for st in tr.steps],
                    "nodes_expanded": tr.nodes_expanded,
                }
            )

    @app.get("/sessions/{sid}/trace")
    def session_trace(sid: str):
        s = get_session(sid)
        tr = trace_from_moves(s.initial, s.moves[: s.cursor])
        payload = tr.to_json(s.graph.name)
        payload["cursor"] = s.cursor
        payload["goal"] = "session"
        return _json(payload)

    @app.get("/sessions/{sid}/export")
    def session_export(sid: str, format: str = "json"):
        s = get_session(sid)
        mu = s.current()
        if format == "dot":
            return Response(content=to_dot(s.graph, mu), media_type="text/plain")
        if format == "json":
            return _json(
                {
                    "graph": s.graph.to_json(),
                    "coloring": serialize.payload_coloring(mu, s.graph.name),
                }
            )
        raise ApiError(400, f"unknown export format {format!r}")

    if static_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app


def run_server(host: str = "127.0.0.1", port: int = 8008,
               static_dir: Optional[str] = None, persist_dir: Optional[str] = None):
    import uvicorn

    uvicorn.run(create_app(static_dir, persist_dir), host=host, port=port)
