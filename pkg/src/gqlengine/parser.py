"""Recursive-descent parsers for query documents and schema text.

One method per grammar rule, one token of lookahead. The first syntax error
aborts the parse with a :class:`ParseError` carrying its source position.
"""

from __future__ import annotations

from . import ast
from .lexer import EOF, INT, NAME, STRING, ParseError, Token, tokenize

MAX_DEPTH = 128

_KEYWORD_LITERALS = {"true": ast.BooleanValue(True), "false": ast.BooleanValue(False),
                     "null": ast.NullValue()}


class Parser:
    def __init__(self, source: str):
        self.tokens = tokenize(source)
        self.pos = 0

    # -- token helpers --

    @property
    def token(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != EOF:
            self.pos += 1
        return tok

    def error(self, message: str, tok: Token | None = None, expected: str | None = None):
        tok = tok or self.token
        return ParseError(message, tok.line, tok.column, expected)

    def peek_punct(self, char: str) -> bool:
        return self.token.is_punct(char)

    def expect_punct(self, char: str) -> Token:
        if not self.peek_punct(char):
            raise self.error(f"expected '{char}', found {self.token.describe()}", expected=char)
        return self.advance()

    def expect_name(self, what: str = "name") -> Token:
        if self.token.kind != NAME:
            raise self.error(f"expected {what}, found {self.token.describe()}", expected=what)
        return self.advance()

    def expect_eof(self):
        if self.token.kind != EOF:
            raise self.error(f"unexpected {self.token.describe()}", expected="end of input")

    # -- query documents --

    def parse_document(self) -> ast.Document:
        operations = []
        seen: dict[str, Token] = {}
        while True:
            start = self.token
            op = self.parse_operation()
            if op.name is not None:
                if op.name in seen:
                    raise self.error(f"duplicate operation name {op.name!r}", start)
                seen[op.name] = start
            operations.append(op)
            if self.token.kind == EOF:
                break
        return ast.Document(tuple(operations))

    def parse_operation(self) -> ast.OperationDefinition:
        tok = self.token
        if tok.kind == EOF:
            raise self.error("expected query operation, found end of input", expected="operation")
        if tok.kind == NAME:
            if tok.text in ("mutation", "subscription"):
                raise self.error(f"{tok.text} operations are not supported")
            if tok.text != "query":
                raise self.error(f"expected 'query' or '{{', found {tok.describe()}")
            self.advance()
            name = None
            if self.token.kind == NAME:
                name = self.advance().text
            return ast.OperationDefinition(self.parse_selection_set(1), name)
        if not tok.is_punct("{"):
            raise self.error(f"expected 'query' or '{{', found {tok.describe()}")
        return ast.OperationDefinition(self.parse_selection_set(1))

    def parse_selection_set(self, depth: int) -> tuple[ast.Field, ...]:
        if depth > MAX_DEPTH:
            raise self.error(f"selection sets nested deeper than {MAX_DEPTH}")
        self.expect_punct("{")
        fields = [self.parse_field(depth)]
        while not self.peek_punct("}"):
            fields.append(self.parse_field(depth))
        self.advance()
        return tuple(fields)

    def parse_field(self, depth: int) -> ast.Field:
        first = self.expect_name("field name")
        alias, name = None, first.text
        if self.peek_punct(":"):
            self.advance()
            alias, name = name, self.expect_name("field name").text
        arguments = ()
        if self.peek_punct("("):
            arguments = self.parse_arguments()
        selections = ()
        if self.peek_punct("{"):
            selections = self.parse_selection_set(depth + 1)
        return ast.Field(name, alias, arguments, selections)

    def parse_arguments(self) -> tuple[ast.Argument, ...]:
        self.expect_punct("(")
        args = []
        seen = set()
        while True:
            tok = self.expect_name("argument name")
            if tok.text in seen:
                raise self.error(f"duplicate argument {tok.text!r}", tok)
            seen.add(tok.text)
            self.expect_punct(":")
            args.append(ast.Argument(tok.text, self.parse_literal()))
            if self.peek_punct(")"):
                self.advance()
                return tuple(args)

    def parse_literal(self) -> ast.Literal:
        tok = self.token
        if tok.kind == STRING:
            self.advance()
            return ast.StringValue(tok.value)
        if tok.kind == INT:
            self.advance()
            return ast.IntValue(tok.value)
        if tok.kind == NAME:
            self.advance()
            return _KEYWORD_LITERALS.get(tok.text) or ast.EnumValue(tok.text)
        if tok.is_punct("[") or tok.is_punct("{"):
            raise self.error("list and object literals are not supported")
        raise self.error(f"expected value, found {tok.describe()}", expected="value")

    # -- schema definitions --

    def parse_schema_document(self) -> list[ast.TypeDefinitionNode]:
        if self.token.kind == EOF:
            raise self.error("at least one type definition required", expected="type definition")
        defs = []
        while self.token.kind != EOF:
            defs.append(self.parse_type_definition())
        return defs

    def parse_description(self) -> str | None:
        tok = self.token
        if tok.kind == STRING:
            self.advance()
            return tok.value
        return tok.comment

    def parse_type_definition(self) -> ast.TypeDefinitionNode:
        description = self.parse_description()
        keyword = self.token
        if keyword.kind != NAME or keyword.text not in ("type", "enum"):
            raise self.error(f"expected 'type' or 'enum', found {keyword.describe()}",
                             expected="type definition")
        self.advance()
        name = self.expect_name("type name").text
        self.expect_punct("{")
        if keyword.text == "enum":
            values = []
            while not self.peek_punct("}"):
                tok = self.expect_name("enum value")
                if tok.text in _KEYWORD_LITERALS:
                    raise self.error(f"{tok.text!r} cannot be an enum value", tok)
                if tok.text in values:
                    raise self.error(f"duplicate enum value {tok.text!r}", tok)
                values.append(tok.text)
            if not values:
                raise self.error("at least one enum value required", expected="enum value")
            self.advance()
            return ast.EnumTypeDef(name, tuple(values), description)
        fields = self.parse_field_defs(closing="}")
        self.advance()
        return ast.ObjectTypeDef(name, tuple(fields), description)

    def parse_field_defs(self, closing: str | None) -> list[ast.FieldDef]:
        fields: list[ast.FieldDef] = []
        seen = set()

        def at_end():
            return self.token.kind == EOF if closing is None else self.peek_punct(closing)

        while not at_end():
            start = self.token
            fd = self.parse_field_def()
            if fd.name in seen:
                raise self.error(f"duplicate field {fd.name!r}", start)
            seen.add(fd.name)
            fields.append(fd)
        if not fields:
            raise self.error("at least one field required", expected="field definition")
        return fields

    def parse_field_def(self) -> ast.FieldDef:
        description = self.parse_description()
        name = self.expect_name("field name").text
        arguments = []
        if self.peek_punct("("):
            self.advance()
            seen = set()
            while True:
                tok = self.expect_name("argument name")
                if tok.text in seen:
                    raise self.error(f"duplicate argument {tok.text!r}", tok)
                seen.add(tok.text)
                self.expect_punct(":")
                arguments.append(ast.InputValueDef(tok.text, self.parse_type_ref()))
                if self.peek_punct(")"):
                    self.advance()
                    break
        self.expect_punct(":")
        return ast.FieldDef(name, self.parse_type_ref(), tuple(arguments), description)

    def parse_type_ref(self, depth: int = 1) -> ast.TypeRef:
        if depth > MAX_DEPTH:
            raise self.error(f"type wrappers nested deeper than {MAX_DEPTH}")
        if self.peek_punct("["):
            self.advance()
            inner = self.parse_type_ref(depth + 1)
            self.expect_punct("]")
            type_ref: ast.TypeRef = ast.ListType(inner)
        else:
            type_ref = ast.NamedType(self.expect_name("type name").text)
        if self.peek_punct("!"):
            self.advance()
            type_ref = ast.NonNullType(type_ref)
        return type_ref


def parse_document(source: str) -> ast.Document:
    p = Parser(source)
    doc = p.parse_document()
    p.expect_eof()
    return doc


def parse_schema_document(source: str) -> list[ast.TypeDefinitionNode]:
    p = Parser(source)
    defs = p.parse_schema_document()
    p.expect_eof()
    return defs


def parse_field_block(source: str) -> list[ast.FieldDef]:
    """Parse a bare list of field definitions with no ``type Name { }`` around it."""
    p = Parser(source)
    return p.parse_field_defs(closing=None)


def parse_type_ref(source: str) -> ast.TypeRef:
    p = Parser(source)
    t = p.parse_type_ref()
    p.expect_eof()
    return t
