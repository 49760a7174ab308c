"""Local HTTP session service backing the interactive explorer.

Endpoints (JSON bodies use the package's diagram/presentation schemas):

* POST /session                 {"diagram": ..., "ruleset": ...} -> {id, state}
* POST /session/{id}/mutate     {"vertex": k} -> state
* POST /session/{id}/undo       -> state
* GET  /session/{id}/state      -> state
* GET  /session/{id}/class?cap=N -> class export (409 when the cap is hit)

Sessions are in-memory; mutations within a session serialize on its lock.
"""

from __future__ import annotations

import json
import os
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlparse

from .diagram import Diagram, InvalidDiagramError
from .mutclass import enumerate_class
from .presentation import RULESETS
from .session import Session

DEFAULT_SERVICE_CLASS_CAP = 10_000


class ServiceState:
    def __init__(self, journal_path: str | None = None, class_cap: int | None = None):
        self.sessions: dict[str, Session] = {}
        self.lock = threading.Lock()
        self.journal_path = journal_path
        self.class_cap = class_cap or int(
            os.environ.get("COXMUT_CAP", DEFAULT_SERVICE_CLASS_CAP)
        )

    def create(self, diagram: Diagram, ruleset: str) -> Session:
        session = Session(diagram, ruleset, journal_path=self.journal_path)
        with self.lock:
            self.sessions[session.session_id] = session
        return session

    def get(self, session_id: str) -> Session | None:
        with self.lock:
            return self.sessions.get(session_id)


class _Handler(BaseHTTPRequestHandler):
    state: ServiceState  # injected by make_server

    def log_message(self, *args) -> None:  # quiet by default
        pass

    def _send(self, code: int, payload: dict) -> None:
        body = json.dumps(payload, sort_keys=True).encode()
        self.send_response(code)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def _error(self, code: int, message: str) -> None:
        self._send(code, {"error": message})

    def _read_json(self) -> dict:
        length = int(self.headers.get("Content-Length") or 0)
        if length == 0:
            return {}
        return json.loads(self.rfile.read(length).decode())

    def do_POST(self) -> None:  # noqa: N802 (http.server API)
        try:
            parts = [p for p in urlparse(self.path).path.split("/") if p]
            if parts == ["session"]:
                body = self._read_json()
                ruleset = body.get("ruleset", "finite-affine")
                if ruleset not in RULESETS:
                    return self._error(400, f"unknown ruleset {ruleset!r}")
                try:
                    diagram = Diagram.from_json_dict(body["diagram"])
                except (KeyError, InvalidDiagramError) as exc:
                    return self._error(400, f"bad diagram: {exc}")
                session = self.state.create(diagram, ruleset)
                return self._send(
                    200, {"id": session.session_id, "state": session.state()}
                )
            if len(parts) == 3 and parts[0] == "session":
                session = self.state.get(parts[1])
                if session is None:
                    return self._error(404, "unknown session")
                if parts[2] == "mutate":
                    body = self._read_json()
                    try:
                        vertex = int(body["vertex"])
                    except (KeyError, TypeError, ValueError):
                        return self._error(400, "body must carry an integer vertex")
                    try:
                        session.mutate_at(vertex)
                    except InvalidDiagramError as exc:
                        return self._error(400, str(exc))
                    return self._send(200, session.state())
                if parts[2] == "undo":
                    session.undo()
                    return self._send(200, session.state())
            return self._error(404, "no such endpoint")
        except Exception as exc:  # pragma: no cover - defensive
            self._error(500, f"internal error: {exc}")

    def do_GET(self) -> None:  # noqa: N802
        try:
            url = urlparse(self.path)
            parts = [p for p in url.path.split("/") if p]
            if len(parts) == 3 and parts[0] == "session":
                session = self.state.get(parts[1])
                if session is None:
                    return self._error(404, "unknown session")
                if parts[2] == "state":
                    return self._send(200, session.state())
                if parts[2] == "class":
                    query = parse_qs(url.query)
                    cap = int(query.get("cap", [self.state.class_cap])[0])
                    cap = min(cap, self.state.class_cap)
                    cls = enumerate_class(session.current, cap)
                    if cls.status == "cap-exceeded":
                        return self._error(409, f"class exceeds cap {cap}")
                    return self._send(200, cls.to_json_dict())
            return self._error(404, "no such endpoint")
        except Exception as exc:  # pragma: no cover - defensive
            self._error(500, f"internal error: {exc}")


def make_server(
    port: int, journal_path: str | None = None, class_cap: int | None = None
) -> ThreadingHTTPServer:
    state = ServiceState(journal_path, class_cap)
    handler = type("Handler", (_Handler,), {"state": state})
    return ThreadingHTTPServer(("127.0.0.1", port), handler)


def serve(port: int, journal_path: str | None = None) -> None:
    server = make_server(port, journal_path)
    print(f"coxmut service on http://127.0.0.1:{server.server_address[1]}", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        server.shutdown()
