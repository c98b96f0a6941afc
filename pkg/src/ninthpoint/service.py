"""Local JSON service over HTTP.

Stateless endpoints, all bodies JSON:

    POST /api/compute      points document + "method" (+ "triple") -> compute payload
    POST /api/degeneracy   points document -> degeneracy report
    GET  /api/health       liveness probe

The deterministic payload travels under "result"; wall-clock timing lives
under "meta" and is excluded from any determinism comparison.  CORS is
wide open: the service binds locally and exists to feed the browser UI.
"""

from __future__ import annotations

import json
import time
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .documents import (
    DocumentError,
    canonical_json,
    handle_compute,
    handle_degeneracy,
    parse_points_document,
)


class _Handler(BaseHTTPRequestHandler):
    server_version = "ninthpoint/0.1"

    def log_message(self, fmt: str, *args) -> None:  # quiet by default
        if getattr(self.server, "verbose", False):
            super().log_message(fmt, *args)

    def _send(self, status: int, payload: dict) -> None:
        body = canonical_json(payload).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def do_OPTIONS(self) -> None:
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()

    def do_GET(self) -> None:
        if self.path == "/api/health":
            self._send(200, {"status": "ok"})
        else:
            self._send(404, {"error": {"message": f"unknown path {self.path}"}})

    def _read_json(self) -> object:
        length = int(self.headers.get("Content-Length", "0"))
        raw = self.rfile.read(length)
        try:
            return json.loads(raw.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError) as exc:
            raise DocumentError("$", f"invalid JSON body: {exc}") from exc

    def do_POST(self) -> None:
        try:
            doc = self._read_json()
            if self.path == "/api/compute":
                if not isinstance(doc, dict):
                    raise DocumentError("$", "body must be a JSON object")
                config = parse_points_document(doc)
                method = doc.get("method", "det")
                triple = doc.get("triple")
                if triple is not None and (
                    not isinstance(triple, list) or len(triple) != 3
                ):
                    raise DocumentError("triple", "triple must be a list of 3 indices")
                start = time.perf_counter()
                result = handle_compute(config, method, triple)
                elapsed_ms = int((time.perf_counter() - start) * 1000)
                self._send(200, {"result": result, "meta": {"timing_ms": elapsed_ms}})
            elif self.path == "/api/degeneracy":
                config = parse_points_document(doc)
                self._send(200, {"result": handle_degeneracy(config)})
            else:
                self._send(404, {"error": {"message": f"unknown path {self.path}"}})
        except DocumentError as exc:
            self._send(400, {"error": {"field": exc.field, "message": exc.message}})


def make_server(port: int = 0, verbose: bool = False) -> ThreadingHTTPServer:
    """Bind a server on localhost; port 0 picks a free port (see .server_port)."""
    server = ThreadingHTTPServer(("127.0.0.1", port), _Handler)
    server.verbose = verbose  # type: ignore[attr-defined]
    return server


def serve(port: int, verbose: bool = True) -> None:
    server = make_server(port, verbose)
    print(f"ninthpoint service listening on http://127.0.0.1:{server.server_port}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
