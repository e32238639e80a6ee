"""Canonical text form for documents, type references and schema definitions.

Output of every printer here is accepted by the matching parser and
re-parses to an equal tree.
"""

from __future__ import annotations

from . import ast

INDENT = "  "

_ESCAPES = {'"': '\\"', "\\": "\\\\", "\n": "\\n", "\t": "\\t",
            "\r": "\\r", "\b": "\\b", "\f": "\\f"}


def quote_string(text: str) -> str:
    out = []
    for ch in text:
        if ch in _ESCAPES:
            out.append(_ESCAPES[ch])
        elif ord(ch) < 0x20 or ord(ch) == 0x7F:
            out.append(f"\\u{ord(ch):04X}")
        else:
            out.append(ch)
    return '"' + "".join(out) + '"'


def print_type_ref(type_ref: ast.TypeRef) -> str:
    if isinstance(type_ref, ast.NamedType):
        return type_ref.name
    if isinstance(type_ref, ast.ListType):
        return "[" + print_type_ref(type_ref.of_type) + "]"
    return print_type_ref(type_ref.of_type) + "!"


def print_literal(lit: ast.Literal) -> str:
    if isinstance(lit, ast.StringValue):
        return quote_string(lit.value)
    if isinstance(lit, ast.BooleanValue):
        return "true" if lit.value else "false"
    if isinstance(lit, ast.IntValue):
        return str(lit.value)
    if isinstance(lit, ast.EnumValue):
        return lit.value
    return "null"


def _print_field(f: ast.Field, depth: int, lines: list[str]) -> None:
    head = INDENT * depth
    if f.alias is not None:
        head += f.alias + ": "
    head += f.name
    if f.arguments:
        head += "(" + ", ".join(f"{a.name}: {print_literal(a.value)}" for a in f.arguments) + ")"
    if not f.selections:
        lines.append(head)
        return
    lines.append(head + " {")
    for sub in f.selections:
        _print_field(sub, depth + 1, lines)
    lines.append(INDENT * depth + "}")


def print_operation(op: ast.OperationDefinition) -> str:
    lines = ["{" if op.name is None else f"{op.operation} {op.name} {{"]
    for f in op.selections:
        _print_field(f, 1, lines)
    lines.append("}")
    return "\n".join(lines)


def print_document(doc: ast.Document) -> str:
    return "\n\n".join(print_operation(op) for op in doc.operations)


def _print_field_def(fd: ast.FieldDef) -> list[str]:
    lines = []
    if fd.description is not None:
        lines.append(INDENT + quote_string(fd.description))
    args = ""
    if fd.arguments:
        args = "(" + ", ".join(f"{a.name}: {print_type_ref(a.type)}" for a in fd.arguments) + ")"
    lines.append(f"{INDENT}{fd.name}{args}: {print_type_ref(fd.type)}")
    return lines


def print_type_definition(defn: ast.TypeDefinitionNode) -> str:
    lines = []
    if defn.description is not None:
        lines.append(quote_string(defn.description))
    if isinstance(defn, ast.EnumTypeDef):
        lines.append(f"enum {defn.name} {{")
        lines.extend(INDENT + v for v in defn.values)
    else:
        lines.append(f"type {defn.name} {{")
        for fd in defn.fields:
            lines.extend(_print_field_def(fd))
    lines.append("}")
    return "\n".join(lines)


def print_schema(defs) -> str:
    return "\n\n".join(print_type_definition(d) for d in defs)
