"""Top-down execution of a validated query.

The query tree and the type tree are walked together starting at ``Query``.
For every selected field a value is first *resolved* and then *completed*
against the field's declared type:

* resolution tries, in order, the field's own resolver, the resolver of the
  field's object type (when the parent has nothing usable for the field),
  and finally plain lookup of the field name in the parent map;
* completion enforces non-null, maps over lists, descends into objects and
  turns bare entity identifiers into objects through the type resolver.

Runtime values are plain Python data: ``None``, ``str``, ``int``, ``float``,
``bool``, ``list`` and ``dict``. Enum values are their symbol strings.
:class:`Opaque` wraps intermediate values that only a field resolver is meant
to look inside.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from typing import Any

from . import ast
from .errors import (AmbiguousOperation, ExecutionError, ResolverFailure, UnknownOperation)
from .printer import print_type_ref
from .parser import parse_document
from .schema import (TYPE_FIELD, EnumType, FieldDefinition, ObjectType, ResolveContext, ScalarType,
                     Schema)
from .validation import coerce_arguments, validate_document

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Opaque:
    """A resolver-private value that the engine passes along untouched."""

    value: Any


@dataclass
class Response:
    data: dict | None
    errors: list[ExecutionError] = field(default_factory=list)

    def to_data(self) -> dict:
        out: dict = {"data": self.data}
        if self.errors:
            out["errors"] = [e.to_data() for e in self.errors]
        return out

    def to_json(self) -> str:
        return dump_json(self.to_data())


def dump_json(value) -> str:
    return json.dumps(value, ensure_ascii=False, separators=(",", ":"))


class FieldError(Exception):
    """Value at one position of the result cannot be produced."""


class _NullPropagation(Exception):
    """A non-null position became null; the nearest nullable one absorbs it."""


def _kind(value) -> str:
    if isinstance(value, Opaque):
        return "opaque value"
    return type(value).__name__


def _complete_scalar(type_name: str, value):
    ok = False
    if type_name == "String":
        ok = isinstance(value, str)
    elif type_name == "Integer":
        ok = isinstance(value, int) and not isinstance(value, bool)
    elif type_name == "Float":
        ok = isinstance(value, (int, float)) and not isinstance(value, bool)
    elif type_name == "Boolean":
        ok = isinstance(value, bool)
    elif type_name == "ID":
        if isinstance(value, (str, int)) and not isinstance(value, bool):
            return str(value)
    if not ok:
        raise FieldError(f"expected {type_name}, got {_kind(value)}")
    return value


def introspect_type(schema: Schema, name: str) -> dict | None:
    t = schema.get_type(name)
    if t is None:
        return None
    out = {"name": t.name, "description": t.description, "fields": None, "enumValues": None}
    if isinstance(t, ObjectType):
        out["kind"] = "OBJECT"
        out["fields"] = [
            {
                "name": f.name,
                "type": print_type_ref(f.type),
                "description": f.description,
                "args": [{"name": a, "type": print_type_ref(tr)} for a, tr in f.arguments.items()],
            }
            for f in t.fields.values()
        ]
    elif isinstance(t, EnumType):
        out["kind"] = "ENUM"
        out["enumValues"] = [{"name": v, "description": None} for v in t.values]
    else:
        out["kind"] = "SCALAR"
    return out


class Execution:
    """State of a single request: the schema plus the errors collected so far."""

    def __init__(self, schema: Schema):
        self.schema = schema
        self.errors: list[ExecutionError] = []

    def record(self, message: str, path) -> None:
        self.errors.append(ExecutionError(message, tuple(path)))

    def execute_selection_set(self, object_type: ObjectType, selections, parent, path=()) -> dict:
        result = {}
        for sel in selections:
            key = sel.response_key
            fdef = self.schema.get_field(object_type, sel.name)
            result[key] = self.execute_field(object_type, fdef, sel, parent, path + (key,))
        return result

    def execute_field(self, object_type: ObjectType, fdef: FieldDefinition, sel: ast.Field,
                      parent, path):
        args = coerce_arguments(self.schema, fdef, sel.argument_map())
        if sel.name == "__typename":
            value = object_type.name
        elif fdef is TYPE_FIELD:
            value = introspect_type(self.schema, args["name"])
        else:
            ctx = ResolveContext(
                id=None, parent=parent, args=args, field=fdef,
                type=self.schema.get_type(ast.named_core(fdef.type)), schema=self.schema,
                path=path)
            try:
                value = self.resolve_field_value(ctx)
            except FieldError as e:
                self.record(str(e), path)
                if isinstance(fdef.type, ast.NonNullType):
                    raise _NullPropagation() from None
                return None
        return self.complete_at(fdef.type, sel.selections, value, path, fdef)

    def _call(self, resolver, ctx: ResolveContext):
        try:
            return resolver(ctx)
        except ResolverFailure:
            log.debug("resolver found nothing at %s", ctx.path)
            return None
        except Exception as e:  # resolver bugs become field errors, not crashes
            raise FieldError(f"resolver failed: {e}") from e

    def resolve_field_value(self, ctx: ResolveContext):
        fdef = ctx.field
        if fdef.resolver is not None:
            return self._call(fdef.resolver, ctx)

        parent = ctx.parent
        core = ctx.type
        # A bare id stored under the field is left for complete_value to materialize.
        if isinstance(core, ObjectType) and core.resolver is not None:
            if not isinstance(parent, dict) or fdef.name not in parent:
                return self._call(core.resolver, ctx)

        if isinstance(parent, dict):
            return parent.get(fdef.name)
        return None

    def complete_at(self, type_ref: ast.TypeRef, selections, value, path, fdef):
        """Complete ``value`` at one result position, absorbing nulls if it is nullable."""
        try:
            return self.complete_value(type_ref, selections, value, path, fdef)
        except FieldError as e:
            self.record(str(e), path)
            if isinstance(type_ref, ast.NonNullType):
                raise _NullPropagation() from None
            return None
        except _NullPropagation:
            if isinstance(type_ref, ast.NonNullType):
                raise
            return None

    def complete_value(self, type_ref: ast.TypeRef, selections, value, path, fdef):
        if isinstance(type_ref, ast.NonNullType):
            result = self.complete_value(type_ref.of_type, selections, value, path, fdef)
            if result is None:
                raise FieldError(
                    f"non-null field {fdef.name} of type {print_type_ref(type_ref)} resolved to null")
            return result

        if value is None:
            return None

        if isinstance(type_ref, ast.ListType):
            if not isinstance(value, (list, tuple)):
                raise FieldError(f"expected a list for {print_type_ref(type_ref)}, got {_kind(value)}")
            return [self.complete_at(type_ref.of_type, selections, item, path + (i,), fdef)
                    for i, item in enumerate(value)]

        target = self.schema.get_type(type_ref.name)
        if isinstance(target, ScalarType):
            return _complete_scalar(target.name, value)
        if isinstance(target, EnumType):
            if not isinstance(value, str) or value not in target.values:
                raise FieldError(f"expected a value of enum {target.name}, got {value!r}")
            return value

        if isinstance(value, dict):
            return self.execute_selection_set(target, selections, value, path)
        if isinstance(value, (list, tuple, Opaque)):
            raise FieldError(f"expected a single {target.name}, got {_kind(value)}")
        entity = self.materialize(target, value, path, fdef)
        return self.execute_selection_set(target, selections, entity, path)

    def materialize(self, target: ObjectType, entity_id, path, fdef) -> dict:
        """Turn a bare identifier into an object through the type's resolver."""
        if target.resolver is None:
            raise FieldError(f"type {target.name} has no resolver to look up id {entity_id!r}")
        ctx = ResolveContext(id=entity_id, parent=None, args={}, field=fdef, type=target,
                             schema=self.schema, path=path)
        entity = self._call(target.resolver, ctx)
        if entity is None:
            raise FieldError(f"no {target.name} found for id {entity_id!r}")
        if not isinstance(entity, dict):
            raise FieldError(f"resolver for {target.name} returned {_kind(entity)}, expected an object")
        return entity


def select_operation(doc: ast.Document, operation_name: str | None) -> ast.OperationDefinition:
    if operation_name is None:
        if len(doc.operations) > 1:
            raise AmbiguousOperation("document has several operations; an operation name is required")
        return doc.operations[0]
    for op in doc.operations:
        if op.name == operation_name:
            return op
    raise UnknownOperation(f"unknown operation {operation_name!r}")


def execute_request(schema: Schema, doc: ast.Document, operation_name: str | None = None) -> Response:
    op = select_operation(doc, operation_name)
    diagnostics = validate_document(schema, doc)
    if diagnostics:
        return Response(None, [ExecutionError(d.message, d.path) for d in diagnostics])
    run = Execution(schema)
    try:
        data = run.execute_selection_set(schema.query_type, op.selections, None)
    except _NullPropagation:
        data = None
    return Response(data, run.errors)


def execute(schema: Schema, source: str, operation_name: str | None = None) -> Response:
    """Parse and execute ``source`` in one call."""
    return execute_request(schema, parse_document(source), operation_name)
