"""gqlengine command line: parse, validate, exec and serve.

Exit codes: 0 success, 1 diagnostics or errors in the result, 2 usage or I/O
problems.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import ast
from .errors import OperationError, SchemaError
from .execution import dump_json
from .lexer import NAME, ParseError, tokenize
from .parser import parse_document, parse_schema_document
from .schema import build_schema_from_sdl
from .server import ServerConfig, StartupError, WireRequest, handle_request, load_engine, serve
from .validation import validate_document

EXIT_OK, EXIT_ERRORS, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _load_schema(path: str):
    try:
        return build_schema_from_sdl(_read(path))
    except (ParseError, SchemaError) as e:
        raise UsageError(f"{path}: invalid schema: {e}") from None


def _looks_like_schema(source: str) -> bool:
    try:
        first = tokenize(source)[0]
    except ParseError:
        return False
    return first.kind == NAME and first.text in ("type", "enum")


def cmd_parse(args, out) -> int:
    source = _read(args.file)
    as_schema = args.schema or (not args.query and _looks_like_schema(source))
    try:
        if as_schema:
            data = ast.type_definitions_to_data(parse_schema_document(source))
        else:
            data = ast.document_to_data(parse_document(source))
    except ParseError as e:
        print(f"{args.file}:{e.line}:{e.column}: {e.message}", file=sys.stderr)
        return EXIT_ERRORS
    print(json.dumps(data, indent=2, ensure_ascii=False), file=out)
    return EXIT_OK


def cmd_validate(args, out) -> int:
    schema = _load_schema(args.schema)
    try:
        doc = parse_document(_read(args.queryfile))
    except ParseError as e:
        print(f"{args.queryfile}:{e.line}:{e.column}: {e.message}", file=out)
        return EXIT_ERRORS
    diagnostics = validate_document(schema, doc)
    for d in diagnostics:
        print(f"{args.queryfile}: {d}", file=out)
    return EXIT_ERRORS if diagnostics else EXIT_OK


def cmd_exec(args, out) -> int:
    if (args.query is None) == (args.queryfile is None):
        raise UsageError("give exactly one of --query TEXT or a query file")
    query = args.query if args.query is not None else _read(args.queryfile)
    try:
        schema = load_engine(args.schema, args.data)
    except StartupError as e:
        raise UsageError(str(e)) from None
    result = handle_request(schema, WireRequest(query, args.operation_name))
    print(dump_json(result), file=out)
    return EXIT_ERRORS if "errors" in result else EXIT_OK


def cmd_serve(args, out) -> int:
    config = ServerConfig(args.schema, args.data, args.host, args.port, args.endpoint)
    try:
        serve(config, ready=lambda srv: print(
            f"listening on http://{srv.server_address[0]}:{srv.server_address[1]}{args.endpoint}",
            file=out, flush=True))
    except StartupError as e:
        raise UsageError(str(e)) from None
    return EXIT_OK


def _default_port() -> int:
    raw = os.environ.get("GQL_PORT")
    if raw is None:
        return 8080
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"GQL_PORT must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gqlengine", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log requests to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="print the syntax tree of a query or schema file as JSON")
    p.add_argument("file")
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--schema", action="store_true", help="treat the file as schema text")
    kind.add_argument("--query", action="store_true", help="treat the file as a query document")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("validate", help="check a query file against a schema")
    p.add_argument("--schema", required=True)
    p.add_argument("queryfile")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("exec", help="run a query against a schema and dataset")
    p.add_argument("--schema", required=True)
    p.add_argument("--data", required=True)
    p.add_argument("--query", help="query text")
    p.add_argument("--operation-name")
    p.add_argument("queryfile", nargs="?")
    p.set_defaults(func=cmd_exec)

    p = sub.add_parser("serve", help="serve the single POST endpoint over HTTP")
    p.add_argument("--schema", required=True)
    p.add_argument("--data", required=True)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=None, help="default: $GQL_PORT or 8080")
    p.add_argument("--endpoint", default="/graphql")
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.command == "serve" and args.port is None:
            args.port = _default_port()
        return args.func(args, out)
    except UsageError as e:
        print(f"gqlengine: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OperationError as e:
        print(f"gqlengine: error: {e}", file=sys.stderr)
        return EXIT_ERRORS


if __name__ == "__main__":
    sys.exit(main())
