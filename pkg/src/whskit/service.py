"""Local JSON HTTP service exposing weighted-quiver mutation sessions.

Stdlib only (http.server with threads); binds to loopback.  Sessions hold a
weighted quiver plus, when the matrix is strictly skew-symmetric, a dual-number
super seed whose rendered variables ride along in every state document.

State documents never contain the session id or any clock, so replaying the
same history on a fresh service yields byte-identical state JSON.  Integers
at or beyond 2^53 in magnitude are serialized as decimal strings.
"""

from __future__ import annotations

import json
import re
import threading
import uuid
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .conventions import JSON_INT_STRING_THRESHOLD
from .errors import WhskitError
from .wquiver import SuperSeed, WeightedQuiver, weighted_dynkin_cluster


def stringify_big_ints(obj):
    """Recursively convert ints that do not fit a double into strings."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        if abs(obj) >= JSON_INT_STRING_THRESHOLD:
            return str(obj)
        return obj
    if isinstance(obj, list):
        return [stringify_big_ints(v) for v in obj]
    if isinstance(obj, tuple):
        return [stringify_big_ints(v) for v in obj]
    if isinstance(obj, dict):
        return {k: stringify_big_ints(v) for k, v in obj.items()}
    return obj


def dump_json(obj):
    return json.dumps(
        stringify_big_ints(obj), sort_keys=True, separators=(",", ":")
    )


class Session:
    """One mutation session: a stack of (quiver, super seed or None) states."""

    def __init__(self, quiver):
        self.lock = threading.Lock()
        seed = None
        if quiver.is_skew_symmetric:
            seed = SuperSeed.initial(quiver)
        self.stack = [(quiver, seed)]
        self.history = []

    @property
    def quiver(self):
        return self.stack[-1][0]

    @property
    def seed(self):
        return self.stack[-1][1]

    def mutate(self, k):
        quiver, seed = self.stack[-1]
        if seed is not None:
            seed = seed.mutate(k)
            quiver = seed.quiver
        else:
            quiver = quiver.mutate(k)
        self.stack.append((quiver, seed))
        self.history.append(k)

    def undo(self):
        if len(self.stack) <= 1:
            return False
        self.stack.pop()
        self.history.pop()
        return True

    def state(self):
        quiver, seed = self.stack[-1]
        return {
            "quiver": quiver.to_json(),
            "history": list(self.history),
            "step": len(self.history),
            "vars": seed.render() if seed is not None else None,
        }


def _quiver_key(quiver):
    return dump_json({"b": [list(r) for r in quiver.b], "w": list(quiver.w)})


def mutation_graph(quiver, depth):
    """Quiver states (matrix + weights) within ``depth`` mutations."""
    start = _quiver_key(quiver)
    nodes = {start: (quiver, 0)}
    edges = set()
    frontier = [quiver]
    for dist in range(1, depth + 1):
        nxt = []
        for q in frontier:
            qk = _quiver_key(q)
            for k in q.mutable():
                r = q.mutate(k)
                rk = _quiver_key(r)
                edges.add((min(qk, rk), max(qk, rk), k))
                if rk not in nodes:
                    nodes[rk] = (r, dist)
                    nxt.append(r)
        frontier = nxt
    return {
        "nodes": [
            {
                "key": key,
                "b": [list(r) for r in q.b],
                "w": list(q.w),
                "dist": dist,
            }
            for key, (q, dist) in sorted(nodes.items())
        ],
        "edges": [
            {"a": a, "b": b, "vertex": k} for a, b, k in sorted(edges)
        ],
    }


class ServiceState:
    def __init__(self, persist_path=None):
        self.sessions = {}
        self.lock = threading.Lock()
        self.persist_path = persist_path
        self._persist_lock = threading.Lock()

    def log(self, record):
        if not self.persist_path:
            return
        with self._persist_lock:
            with open(self.persist_path, "a") as fh:
                fh.write(dump_json(record) + "\n")

    def create(self, quiver):
        sid = uuid.uuid4().hex
        with self.lock:
            self.sessions[sid] = Session(quiver)
        return sid

    def get(self, sid):
        with self.lock:
            return self.sessions.get(sid)


def quiver_from_body(body):
    if "b" in body:
        return WeightedQuiver(
            body["b"], body["w"], body.get("frozen", ())
        )
    if "type" in body:
        psi = body.get("psi")
        if psi is None:
            raise WhskitError("psi is required with type")
        q, _ = weighted_dynkin_cluster(body["type"], psi, body.get("levi"))
        return q
    raise WhskitError("body needs either b/w or type/psi")


class Handler(BaseHTTPRequestHandler):
    server_version = "whskit"
    protocol_version = "HTTP/1.1"

    # set by make_server
    state: ServiceState = None

    def log_message(self, fmt, *args):
        pass  # keep test output clean

    def _reply(self, code, payload):
        data = dump_json(payload).encode()
        self.send_response(code)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(data)))
        self.end_headers()
        self.wfile.write(data)

    def _read_body(self):
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b""
        if not raw:
            return {}
        try:
            body = json.loads(raw)
        except ValueError:
            return None
        if not isinstance(body, dict):
            return None
        return body

    def do_GET(self):
        m = re.fullmatch(r"/api/session/([0-9a-f]+)", self.path)
        if m:
            session = self.state.get(m.group(1))
            if session is None:
                return self._reply(404, {"error": "unknown session"})
            with session.lock:
                return self._reply(200, session.state())
        m = re.fullmatch(
            r"/api/session/([0-9a-f]+)/graph(?:\?depth=(\d+))?", self.path
        )
        if m:
            session = self.state.get(m.group(1))
            if session is None:
                return self._reply(404, {"error": "unknown session"})
            depth = int(m.group(2) or 1)
            if not 1 <= depth <= 3:
                return self._reply(422, {"error": "depth must be 1..3"})
            with session.lock:
                graph = mutation_graph(session.quiver, depth)
            return self._reply(200, graph)
        if self.path == "/api/health":
            return self._reply(200, {"status": "ok"})
        return self._reply(404, {"error": "no such route"})

    def do_POST(self):
        if self.path == "/api/session":
            body = self._read_body()
            if body is None:
                return self._reply(422, {"error": "malformed JSON body"})
            try:
                quiver = quiver_from_body(body)
            except (WhskitError, KeyError, TypeError, ValueError) as e:
                return self._reply(422, {"error": str(e) or "bad quiver"})
            sid = self.state.create(quiver)
            session = self.state.get(sid)
            self.state.log({"op": "create", "session": sid, "body": body})
            with session.lock:
                return self._reply(200, {"id": sid, "state": session.state()})

        m = re.fullmatch(r"/api/session/([0-9a-f]+)/mutate", self.path)
        if m:
            session = self.state.get(m.group(1))
            if session is None:
                return self._reply(404, {"error": "unknown session"})
            body = self._read_body()
            if body is None or "vertex" not in body:
                return self._reply(422, {"error": "need a vertex"})
            try:
                k = int(body["vertex"])
            except (TypeError, ValueError):
                return self._reply(422, {"error": "vertex must be an integer"})
            with session.lock:
                q = session.quiver
                if not 0 <= k < q.n:
                    return self._reply(422, {"error": "vertex out of range"})
                if k in q.frozen:
                    return self._reply(
                        409, {"error": "vertex %d is frozen" % k}
                    )
                try:
                    session.mutate(k)
                except WhskitError as e:
                    return self._reply(409, {"error": str(e)})
                self.state.log(
                    {"op": "mutate", "session": m.group(1), "vertex": k}
                )
                return self._reply(200, session.state())

        m = re.fullmatch(r"/api/session/([0-9a-f]+)/undo", self.path)
        if m:
            session = self.state.get(m.group(1))
            if session is None:
                return self._reply(404, {"error": "unknown session"})
            with session.lock:
                if not session.undo():
                    return self._reply(409, {"error": "nothing to undo"})
                self.state.log({"op": "undo", "session": m.group(1)})
                return self._reply(200, session.state())

        return self._reply(404, {"error": "no such route"})


def make_server(port=0, persist_path=None):
    state = ServiceState(persist_path)
    handler = type("BoundHandler", (Handler,), {"state": state})
    server = ThreadingHTTPServer(("127.0.0.1", port), handler)
    return server


def serve(port, persist_path=None):
    server = make_server(port, persist_path)
    host, actual_port = server.server_address
    print("serving on http://%s:%d" % (host, actual_port), flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
