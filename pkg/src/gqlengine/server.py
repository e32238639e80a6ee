"""Single-endpoint HTTP transport.

``POST <endpoint>`` with ``{"query": "...", "operationName": "..."}``.
GraphQL-level failures (syntax, validation, execution) are reported inside a
200 response; only a malformed transport body gets a 400.
"""

from __future__ import annotations

import json
import logging
import signal
import threading
from dataclasses import dataclass
from http import HTTPStatus
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .errors import ExecutionError, OperationError, RegistrationError, SchemaError
from .execution import Response, dump_json, execute_request
from .lexer import ParseError
from .parser import parse_document
from .schema import Schema, build_schema_from_sdl
from .store import FormatError, bind_example_resolvers, load_dataset

log = logging.getLogger(__name__)

DEFAULT_ENDPOINT = "/graphql"


class TransportError(ValueError):
    pass


class StartupError(RuntimeError):
    pass


@dataclass(frozen=True)
class ServerConfig:
    schema_path: str
    data_path: str
    host: str = "127.0.0.1"
    port: int = 8080
    endpoint_path: str = DEFAULT_ENDPOINT


@dataclass(frozen=True)
class WireRequest:
    query: str
    operation_name: str | None = None


def parse_wire_request(body: bytes) -> WireRequest:
    try:
        payload = json.loads(body)
    except (UnicodeDecodeError, json.JSONDecodeError) as e:
        raise TransportError(f"request body is not valid JSON: {e}") from None
    if not isinstance(payload, dict):
        raise TransportError("request body must be a JSON object")
    query = payload.get("query")
    if not isinstance(query, str) or not query.strip():
        raise TransportError("request must contain a non-empty 'query' string")
    op_name = payload.get("operationName")
    if op_name is not None and not isinstance(op_name, str):
        raise TransportError("'operationName' must be a string")
    return WireRequest(query, op_name or None)


def handle_request(schema: Schema, request: WireRequest) -> dict:
    """Parse, validate and execute one request; returns the response document."""
    try:
        doc = parse_document(request.query)
    except ParseError as e:
        err = ExecutionError(f"syntax error: {e.message}", locations=((e.line, e.column),))
        return Response(None, [err]).to_data()
    try:
        response = execute_request(schema, doc, request.operation_name)
    except OperationError as e:
        response = Response(None, [ExecutionError(str(e))])
    return response.to_data()


def respond(schema: Schema, body: bytes) -> tuple[int, bytes]:
    try:
        request = parse_wire_request(body)
    except TransportError as e:
        return HTTPStatus.BAD_REQUEST, dump_json({"errors": [{"message": str(e)}]}).encode()
    return HTTPStatus.OK, dump_json(handle_request(schema, request)).encode("utf-8")


def load_engine(schema_path, data_path) -> Schema:
    """Read the SDL and dataset files and wire up the example resolvers."""
    try:
        with open(schema_path, encoding="utf-8") as fh:
            schema = build_schema_from_sdl(fh.read())
        store = load_dataset(data_path)
        return bind_example_resolvers(schema, store)
    except (OSError, ParseError, SchemaError, FormatError, RegistrationError) as e:
        raise StartupError(str(e)) from e


def _make_handler(schema: Schema, endpoint: str):
    class GraphQLHandler(BaseHTTPRequestHandler):
        protocol_version = "HTTP/1.1"

        def _send(self, status, body: bytes, extra_headers=()):
            self.send_response(status)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(body)))
            for k, v in extra_headers:
                self.send_header(k, v)
            self.end_headers()
            self.wfile.write(body)

        def _reject(self):
            if self.path.split("?", 1)[0] != endpoint:
                self._send(HTTPStatus.NOT_FOUND, b'{"errors":[{"message":"not found"}]}')
            else:
                self._send(HTTPStatus.METHOD_NOT_ALLOWED,
                           b'{"errors":[{"message":"only POST is supported"}]}',
                           [("Allow", "POST")])

        do_GET = do_PUT = do_DELETE = do_PATCH = _reject

        def do_POST(self):
            if self.path.split("?", 1)[0] != endpoint:
                self._reject()
                return
            length = int(self.headers.get("Content-Length") or 0)
            status, body = respond(schema, self.rfile.read(length))
            self._send(status, body)

        def log_message(self, fmt, *args):
            log.info("%s - " + fmt, self.address_string(), *args)

    return GraphQLHandler


def make_server(schema: Schema, host: str = "127.0.0.1", port: int = 8080,
                endpoint_path: str = DEFAULT_ENDPOINT) -> ThreadingHTTPServer:
    try:
        server = ThreadingHTTPServer((host, port), _make_handler(schema, endpoint_path))
    except OSError as e:
        raise StartupError(f"cannot listen on {host}:{port}: {e}") from e
    server.daemon_threads = True
    return server


def serve(config: ServerConfig, ready=None) -> None:
    """Run until interrupted. ``ready`` is called with the bound server."""
    schema = load_engine(config.schema_path, config.data_path)
    server = make_server(schema, config.host, config.port, config.endpoint_path)
    if threading.current_thread() is threading.main_thread():
        signal.signal(signal.SIGTERM, lambda *_: threading.Thread(target=server.shutdown).start())
    host, port = server.server_address[:2]
    log.info("serving on http://%s:%s%s", host, port, config.endpoint_path)
    if ready is not None:
        ready(server)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
