"""Syntax tree nodes shared by query documents and schema definitions.

All nodes are frozen dataclasses; tuples are used for ordered children so
that trees are hashable and safe to share between threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

NAME_RE = re.compile(r"[_A-Za-z][_0-9A-Za-z]*\Z")


def is_name(text: str) -> bool:
    return bool(NAME_RE.match(text))


# -- type references --------------------------------------------------------


@dataclass(frozen=True)
class NamedType:
    name: str

    def __post_init__(self):
        if not is_name(self.name):
            raise ValueError(f"invalid type name {self.name!r}")


@dataclass(frozen=True)
class ListType:
    of_type: TypeRef


@dataclass(frozen=True)
class NonNullType:
    of_type: TypeRef

    def __post_init__(self):
        if isinstance(self.of_type, NonNullType):
            raise ValueError("non-null type cannot wrap another non-null type")


TypeRef = Union[NamedType, ListType, NonNullType]


def named_core(type_ref: TypeRef) -> str:
    """Strip list and non-null wrappers and return the innermost type name."""
    while not isinstance(type_ref, NamedType):
        type_ref = type_ref.of_type
    return type_ref.name


def is_non_null(type_ref: TypeRef) -> bool:
    return isinstance(type_ref, NonNullType)


def nullable(type_ref: TypeRef) -> TypeRef:
    return type_ref.of_type if isinstance(type_ref, NonNullType) else type_ref


# -- literal values ---------------------------------------------------------


@dataclass(frozen=True)
class StringValue:
    value: str


@dataclass(frozen=True)
class IntValue:
    value: int


@dataclass(frozen=True)
class BooleanValue:
    value: bool


@dataclass(frozen=True)
class EnumValue:
    value: str


@dataclass(frozen=True)
class NullValue:
    pass


Literal = Union[StringValue, IntValue, BooleanValue, EnumValue, NullValue]


# -- query documents ---------------------------------------------------------


@dataclass(frozen=True)
class Argument:
    name: str
    value: Literal


@dataclass(frozen=True)
class Field:
    name: str
    alias: str | None = None
    arguments: tuple[Argument, ...] = ()
    selections: tuple[Field, ...] = ()

    def __post_init__(self):
        names = [a.name for a in self.arguments]
        if len(names) != len(set(names)):
            raise ValueError(f"duplicate argument on field {self.name!r}")

    @property
    def response_key(self) -> str:
        return self.alias if self.alias is not None else self.name

    def argument_map(self) -> dict[str, Literal]:
        return {a.name: a.value for a in self.arguments}


@dataclass(frozen=True)
class OperationDefinition:
    selections: tuple[Field, ...]
    name: str | None = None
    operation: str = "query"

    def __post_init__(self):
        if not self.selections:
            raise ValueError("operation must select at least one field")


@dataclass(frozen=True)
class Document:
    operations: tuple[OperationDefinition, ...]

    def __post_init__(self):
        if not self.operations:
            raise ValueError("document must contain at least one operation")
        names = [op.name for op in self.operations if op.name is not None]
        if len(names) != len(set(names)):
            raise ValueError("operation names must be unique")


# -- schema definitions -------------------------------------------------------


@dataclass(frozen=True)
class InputValueDef:
    name: str
    type: TypeRef


@dataclass(frozen=True)
class FieldDef:
    name: str
    type: TypeRef
    arguments: tuple[InputValueDef, ...] = ()
    description: str | None = None

    def __post_init__(self):
        names = [a.name for a in self.arguments]
        if len(names) != len(set(names)):
            raise ValueError(f"duplicate argument on field {self.name!r}")


@dataclass(frozen=True)
class ObjectTypeDef:
    name: str
    fields: tuple[FieldDef, ...]
    description: str | None = None

    def __post_init__(self):
        if not self.fields:
            raise ValueError(f"type {self.name!r} must declare at least one field")
        names = [f.name for f in self.fields]
        if len(names) != len(set(names)):
            raise ValueError(f"duplicate field in type {self.name!r}")


@dataclass(frozen=True)
class EnumTypeDef:
    name: str
    values: tuple[str, ...]
    description: str | None = None

    def __post_init__(self):
        if not self.values:
            raise ValueError(f"enum {self.name!r} must declare at least one value")
        if len(self.values) != len(set(self.values)):
            raise ValueError(f"duplicate value in enum {self.name!r}")


TypeDefinitionNode = Union[ObjectTypeDef, EnumTypeDef]


# -- JSON dumps ---------------------------------------------------------------


def literal_to_data(lit: Literal):
    if isinstance(lit, NullValue):
        return {"kind": "Null"}
    kind = type(lit).__name__.removesuffix("Value")
    return {"kind": kind, "value": lit.value}


def type_ref_to_data(type_ref: TypeRef):
    if isinstance(type_ref, NamedType):
        return {"kind": "Named", "name": type_ref.name}
    kind = "List" if isinstance(type_ref, ListType) else "NonNull"
    return {"kind": kind, "ofType": type_ref_to_data(type_ref.of_type)}


def field_to_data(f: Field):
    out = {"name": f.name}
    if f.alias is not None:
        out["alias"] = f.alias
    if f.arguments:
        out["arguments"] = {a.name: literal_to_data(a.value) for a in f.arguments}
    if f.selections:
        out["selections"] = [field_to_data(s) for s in f.selections]
    return out


def document_to_data(doc: Document):
    """Plain-JSON view of a document, used by the ``parse`` command."""
    return {
        "kind": "Document",
        "operations": [
            {
                "operation": op.operation,
                "name": op.name,
                "selections": [field_to_data(s) for s in op.selections],
            }
            for op in doc.operations
        ],
    }


def type_definitions_to_data(defs):
    out = []
    for d in defs:
        if isinstance(d, EnumTypeDef):
            out.append({"kind": "Enum", "name": d.name,
                        "description": d.description, "values": list(d.values)})
            continue
        out.append({
            "kind": "Object",
            "name": d.name,
            "description": d.description,
            "fields": [
                {
                    "name": f.name,
                    "type": type_ref_to_data(f.type),
                    "arguments": {a.name: type_ref_to_data(a.type) for a in f.arguments},
                    "description": f.description,
                }
                for f in d.fields
            ],
        })
    return {"kind": "SchemaDocument", "definitions": out}
