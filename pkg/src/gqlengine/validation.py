"""Static checks of a query document against a schema, plus argument coercion.

Nothing in here calls a resolver. All problems are collected in document
order instead of stopping at the first one.
"""

from __future__ import annotations

from . import ast
from .errors import CoercionError, Diagnostic
from .schema import EnumType, FieldDefinition, ObjectType, ScalarType, Schema


def _scalar(name: str, lit: ast.Literal):
    if name == "String" and isinstance(lit, ast.StringValue):
        return lit.value
    if name == "Integer" and isinstance(lit, ast.IntValue):
        return lit.value
    if name == "Float" and isinstance(lit, ast.IntValue):
        return float(lit.value)
    if name == "Boolean" and isinstance(lit, ast.BooleanValue):
        return lit.value
    if name == "ID" and isinstance(lit, (ast.StringValue, ast.IntValue)):
        return str(lit.value)
    raise CoercionError(f"expected {name}, found {_describe(lit)}")


def _describe(lit: ast.Literal) -> str:
    from .printer import print_literal
    return print_literal(lit)


def coerce_literal(schema: Schema, type_ref: ast.TypeRef, lit: ast.Literal):
    if isinstance(type_ref, ast.NonNullType):
        if isinstance(lit, ast.NullValue):
            raise CoercionError("expected non-null value, found null")
        return coerce_literal(schema, type_ref.of_type, lit)
    if isinstance(lit, ast.NullValue):
        return None
    if isinstance(type_ref, ast.ListType):
        # a single literal stands for a one-element list
        return [coerce_literal(schema, type_ref.of_type, lit)]
    target = schema.get_type(type_ref.name)
    if isinstance(target, ScalarType):
        return _scalar(target.name, lit)
    if isinstance(target, EnumType):
        if isinstance(lit, ast.EnumValue) and lit.value in target.values:
            return lit.value
        raise CoercionError(f"expected a value of enum {target.name}, found {_describe(lit)}")
    raise CoercionError(f"type {type_ref.name} cannot be used for arguments")


def coerce_arguments(schema: Schema, field_def: FieldDefinition,
                     literals: dict[str, ast.Literal]) -> dict:
    """Map argument literals to runtime values.

    Arguments that were not supplied are left out of the result rather than
    filled with null, so a resolver can tell "absent" from "null".
    """
    out = {}
    for name, lit in literals.items():
        if name not in field_def.arguments:
            raise CoercionError(f"unknown argument {name}")
        try:
            out[name] = coerce_literal(schema, field_def.arguments[name], lit)
        except CoercionError as e:
            raise CoercionError(f"argument {name}: {e}") from None
    for name, type_ref in field_def.arguments.items():
        if name not in out and isinstance(type_ref, ast.NonNullType):
            raise CoercionError(f"missing required argument {name}")
    return out


def validate_document(schema: Schema, doc: ast.Document) -> list[Diagnostic]:
    diags: list[Diagnostic] = []
    for op in doc.operations:
        _validate_selections(schema, schema.query_type, op.selections, (), diags)
    return diags


def _validate_selections(schema, parent: ObjectType, selections, path, diags):
    seen = set()
    for sel in selections:
        key = sel.response_key
        here = path + (key,)
        if key in seen:
            diags.append(Diagnostic(f"duplicate response key {key}", here))
            continue
        seen.add(key)

        fdef = schema.get_field(parent, sel.name)
        if fdef is None:
            diags.append(Diagnostic(f"unknown field {sel.name} on {parent.name}", here))
            continue

        supplied = sel.argument_map()
        for name, lit in supplied.items():
            if name not in fdef.arguments:
                diags.append(Diagnostic(
                    f"unknown argument {name} on field {parent.name}.{sel.name}", here + (name,)))
                continue
            try:
                coerce_literal(schema, fdef.arguments[name], lit)
            except CoercionError as e:
                diags.append(Diagnostic(f"invalid value for argument {name}: {e}", here + (name,)))
        for name, type_ref in fdef.arguments.items():
            if isinstance(type_ref, ast.NonNullType) and name not in supplied:
                diags.append(Diagnostic(f"missing required argument {name}", here + (name,)))

        target = schema.get_type(ast.named_core(fdef.type))
        if isinstance(target, ObjectType):
            if not sel.selections:
                diags.append(Diagnostic(f"object field {sel.name} requires selection set", here))
            else:
                _validate_selections(schema, target, sel.selections, here, diags)
        elif sel.selections:
            diags.append(Diagnostic(
                f"leaf field {sel.name} of type {target.name} must not have a selection set", here))
