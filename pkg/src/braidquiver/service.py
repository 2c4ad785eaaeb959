"""Stateless JSON-over-HTTP service exposing the core operations.

Every request carries its full input; handlers call pure functions, so
responses are deterministic and independent of request order. Errors:
400 for malformed requests, 422 for domain violations.
"""

from __future__ import annotations

import json
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .errors import BraidQuiverError, ParseError
from .ops import ROUTES, encode


class _Handler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"

    def log_message(self, fmt, *args):  # quiet by default
        pass

    def _send(self, status: int, payload: dict) -> None:
        body = encode(payload).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.end_headers()
        self.wfile.write(body)

    def do_OPTIONS(self) -> None:
        self._send(200, {})

    def do_GET(self) -> None:
        if self.path == "/api/health":
            self._send(200, {"status": "ok"})
        else:
            self._send(404, {"error": f"unknown path {self.path}"})

    def do_POST(self) -> None:
        handler = ROUTES.get(self.path)
        if handler is None:
            self._send(404, {"error": f"unknown path {self.path}"})
            return
        try:
            length = int(self.headers.get("Content-Length", 0))
            raw = self.rfile.read(length)
            body = json.loads(raw.decode("utf-8")) if raw else {}
            if not isinstance(body, dict):
                raise ParseError("request body must be a JSON object")
        except (ValueError, UnicodeDecodeError) as exc:
            self._send(400, {"error": f"bad JSON: {exc}"})
            return
        try:
            self._send(200, handler(body))
        except ParseError as exc:
            self._send(400, {"error": str(exc)})
        except BraidQuiverError as exc:
            self._send(422, {"error": str(exc)})


def serve(port: int, host: str = "127.0.0.1") -> ThreadingHTTPServer:
    """Create the server (callers decide whether to block)."""
    return ThreadingHTTPServer((host, port), _Handler)


def serve_forever(port: int, host: str = "127.0.0.1") -> None:
    server = serve(port, host)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
