"""A small GraphQL engine: SDL and query parsing, validation, resolver-driven
execution, and a single-endpoint JSON server."""

from .ast import Document, Field, ListType, NamedType, NonNullType
from .errors import (AlreadyBound, AmbiguousOperation, CoercionError, Diagnostic, ExecutionError,
                     ResolverFailure, SchemaError, TypeNotFound, UnknownField, UnknownOperation,
                     UnknownType)
from .execution import Opaque, Response, execute, execute_request, introspect_type
from .lexer import ParseError, Token, tokenize
from .parser import parse_document, parse_field_block, parse_schema_document, parse_type_ref
from .printer import print_document, print_schema, print_type_ref
from .schema import ResolveContext, Schema, build_schema, build_schema_from_sdl, validate_schema
from .store import EntityStore, bind_example_resolvers, load_dataset, loads_dataset
from .validation import coerce_arguments, validate_document

__all__ = [
    "AlreadyBound", "AmbiguousOperation", "CoercionError", "Diagnostic", "Document",
    "EntityStore", "ExecutionError", "Field", "ListType", "NamedType", "NonNullType", "Opaque",
    "ParseError", "ResolveContext", "ResolverFailure", "Response", "Schema", "SchemaError",
    "Token", "TypeNotFound", "UnknownField", "UnknownOperation", "UnknownType",
    "bind_example_resolvers", "build_schema", "build_schema_from_sdl", "coerce_arguments",
    "execute", "execute_request", "introspect_type", "load_dataset", "loads_dataset",
    "parse_document", "parse_field_block", "parse_schema_document", "parse_type_ref",
    "print_document", "print_schema", "print_type_ref", "tokenize", "validate_document",
    "validate_schema",
]
