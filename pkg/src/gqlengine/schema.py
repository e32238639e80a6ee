"""Type registry built from parsed schema definitions.

Types refer to each other by name only, so a cyclic schema such as
``Person.friends: [Person]`` is an ordinary finite structure. Every object
type and every field carries a resolver slot that starts out empty and may be
bound exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Union

from . import ast
from .ast import ListType, NamedType, NonNullType
from .errors import (AlreadyBound, Diagnostic, SchemaError, TypeNotFound, UnknownField,
                     UnknownType)
from .parser import parse_schema_document

QUERY_TYPE_NAME = "Query"
BUILTIN_SCALARS = ("String", "Integer", "Boolean", "Float", "ID")

Resolver = Callable[["ResolveContext"], Any]


@dataclass
class ScalarType:
    name: str
    description: str | None = None


@dataclass
class EnumType:
    name: str
    values: tuple[str, ...]
    description: str | None = None


@dataclass
class FieldDefinition:
    name: str
    type: ast.TypeRef
    arguments: dict[str, ast.TypeRef] = field(default_factory=dict)
    description: str | None = None
    resolver: Resolver | None = None


@dataclass
class ObjectType:
    name: str
    fields: dict[str, FieldDefinition]
    description: str | None = None
    resolver: Resolver | None = None


TypeDefinition = Union[ObjectType, EnumType, ScalarType]


@dataclass
class ResolveContext:
    """Everything a resolver gets to see.

    ``id`` is set when an entity is being materialized from a bare
    identifier, ``parent`` is the raw value of the enclosing object (absent
    for root fields), ``args`` holds the coerced field arguments.
    """

    id: Any
    parent: dict | None
    args: dict
    field: FieldDefinition
    type: TypeDefinition
    schema: Schema
    path: tuple = ()


def _nn(name):
    return NonNullType(NamedType(name))


def _list_nn(name):
    return ListType(NonNullType(NamedType(name)))


def _meta_types() -> dict[str, TypeDefinition]:
    def obj(name, *fields):
        return ObjectType(name, {f.name: f for f in fields})

    return {
        "__TypeKind": EnumType("__TypeKind", ("OBJECT", "ENUM", "SCALAR")),
        "__Type": obj(
            "__Type",
            FieldDefinition("name", _nn("String")),
            FieldDefinition("kind", _nn("__TypeKind")),
            FieldDefinition("description", NamedType("String")),
            FieldDefinition("fields", _list_nn("__Field")),
            FieldDefinition("enumValues", _list_nn("__EnumValue")),
        ),
        "__Field": obj(
            "__Field",
            FieldDefinition("name", _nn("String")),
            FieldDefinition("type", _nn("String")),
            FieldDefinition("description", NamedType("String")),
            FieldDefinition("args", _list_nn("__InputValue")),
        ),
        "__InputValue": obj(
            "__InputValue",
            FieldDefinition("name", _nn("String")),
            FieldDefinition("type", _nn("String")),
        ),
        "__EnumValue": obj(
            "__EnumValue",
            FieldDefinition("name", _nn("String")),
            FieldDefinition("description", NamedType("String")),
        ),
    }


META_TYPES = _meta_types()
TYPENAME_FIELD = FieldDefinition("__typename", _nn("String"))
TYPE_FIELD = FieldDefinition("__type", NamedType("__Type"), {"name": _nn("String")})
_SCALARS = {name: ScalarType(name) for name in BUILTIN_SCALARS}


class Schema:
    """Registry of named types rooted at the ``Query`` object type."""

    query_type_name = QUERY_TYPE_NAME

    def __init__(self, types: dict[str, TypeDefinition]):
        self.types = dict(types)

    def __eq__(self, other):
        return isinstance(other, Schema) and self.types == other.types

    def __repr__(self):
        return f"Schema({list(self.types)})"

    @property
    def query_type(self) -> ObjectType:
        return self.types[self.query_type_name]

    def get_type(self, name: str) -> TypeDefinition | None:
        found = self.types.get(name)
        if found is None:
            found = _SCALARS.get(name) or META_TYPES.get(name)
        return found

    def lookup_type(self, name: str) -> TypeDefinition:
        found = self.get_type(name)
        if found is None:
            raise TypeNotFound(name)
        return found

    def get_field(self, type_def: ObjectType, name: str) -> FieldDefinition | None:
        """Field lookup including the implicit ``__typename`` and root ``__type``."""
        if name == "__typename":
            return TYPENAME_FIELD
        if name == "__type" and type_def.name == self.query_type_name:
            return TYPE_FIELD
        return type_def.fields.get(name)

    def _user_object(self, type_name: str) -> ObjectType:
        t = self.types.get(type_name)
        if not isinstance(t, ObjectType):
            raise UnknownType(f"no object type named {type_name!r}")
        return t

    def register_type_resolver(self, type_name: str, resolver: Resolver) -> Schema:
        t = self._user_object(type_name)
        if t.resolver is not None:
            raise AlreadyBound(f"type {type_name!r} already has a resolver")
        t.resolver = resolver
        return self

    def register_field_resolver(self, type_name: str, field_name: str,
                                resolver: Resolver) -> Schema:
        t = self._user_object(type_name)
        f = t.fields.get(field_name)
        if f is None:
            raise UnknownField(f"type {type_name!r} has no field {field_name!r}")
        if f.resolver is not None:
            raise AlreadyBound(f"field {type_name}.{field_name} already has a resolver")
        f.resolver = resolver
        return self

    def set_description(self, type_name: str, text: str | None,
                        field_name: str | None = None) -> Schema:
        t = self.types.get(type_name)
        if t is None:
            raise UnknownType(f"no type named {type_name!r}")
        if field_name is None:
            t.description = text
            return self
        if not isinstance(t, ObjectType) or field_name not in t.fields:
            raise UnknownField(f"type {type_name!r} has no field {field_name!r}")
        t.fields[field_name].description = text
        return self


def _is_input_type(t: TypeDefinition | None) -> bool:
    return isinstance(t, (ScalarType, EnumType))


def validate_schema(schema: Schema) -> list[Diagnostic]:
    diags = []
    query = schema.types.get(QUERY_TYPE_NAME)
    if query is None:
        diags.append(Diagnostic(f"root type {QUERY_TYPE_NAME} missing", (QUERY_TYPE_NAME,)))
    elif not isinstance(query, ObjectType):
        diags.append(Diagnostic(f"root type {QUERY_TYPE_NAME} must be an object type",
                                (QUERY_TYPE_NAME,)))

    for key, t in schema.types.items():
        path = (key,)
        if key != t.name:
            diags.append(Diagnostic(f"type registered as {key!r} is named {t.name!r}", path))
        if not ast.is_name(key):
            diags.append(Diagnostic(f"invalid type name {key!r}", path))
        elif key.startswith("__"):
            diags.append(Diagnostic(f"type name {key!r} is reserved", path))
        if key in BUILTIN_SCALARS and not isinstance(t, ScalarType):
            diags.append(Diagnostic(f"built-in scalar {key} cannot be redefined", path))

        if isinstance(t, EnumType):
            if not t.values:
                diags.append(Diagnostic(f"enum {key} must declare at least one value", path))
            if len(set(t.values)) != len(t.values):
                diags.append(Diagnostic(f"enum {key} has duplicate values", path))
        elif isinstance(t, ObjectType):
            if not t.fields:
                diags.append(Diagnostic(f"object type {key} must declare at least one field", path))
            for fname, fdef in t.fields.items():
                fpath = path + (fname,)
                if fname.startswith("__"):
                    diags.append(Diagnostic(f"field name {fname!r} is reserved", fpath))
                core = ast.named_core(fdef.type)
                if schema.get_type(core) is None or core.startswith("__"):
                    diags.append(Diagnostic(f"unresolved type {core}", fpath))
                for aname, atype in fdef.arguments.items():
                    acore = ast.named_core(atype)
                    target = schema.get_type(acore)
                    if target is None:
                        diags.append(Diagnostic(f"unresolved type {acore}", fpath + (aname,)))
                    elif not _is_input_type(target) or acore.startswith("__"):
                        diags.append(Diagnostic(
                            f"argument types must be scalar or enum, {aname} is {acore}",
                            fpath + (aname,)))
    return diags


def build_schema(defs) -> Schema:
    """Turn parsed type definitions into a :class:`Schema`.

    Raises :class:`SchemaError` carrying every problem found.
    """
    types: dict[str, TypeDefinition] = {}
    diags = []
    for d in defs:
        if d.name in types:
            diags.append(Diagnostic(f"duplicate type name {d.name}", (d.name,)))
            continue
        if isinstance(d, ast.EnumTypeDef):
            types[d.name] = EnumType(d.name, tuple(d.values), d.description)
            continue
        fields = {}
        for fd in d.fields:
            fields[fd.name] = FieldDefinition(
                fd.name, fd.type, {a.name: a.type for a in fd.arguments}, fd.description)
        types[d.name] = ObjectType(d.name, fields, d.description)
    schema = Schema(types)
    diags.extend(validate_schema(schema))
    if diags:
        raise SchemaError(diags)
    return schema


def build_schema_from_sdl(source: str) -> Schema:
    return build_schema(parse_schema_document(source))
