import pytest

from gqlengine import ast
from gqlengine.ast import ListType, NamedType, NonNullType
from gqlengine.parser import parse_document, parse_schema_document
from gqlengine.printer import print_document, print_literal, print_schema, print_type_ref


def test_single_field():
    doc = ast.Document((ast.OperationDefinition((ast.Field("a"),)),))
    assert print_document(doc) == "{\n  a\n}"


def test_sample_query_round_trip(get_alice):
    doc = parse_document(get_alice)
    text = print_document(doc)
    assert text.startswith("query getAlice {\n  person(name: \"Alice\") {")
    assert "    years: age\n" in text
    assert parse_document(text) == doc


def test_alias_printing():
    field = ast.Field("age", alias="years")
    doc = ast.Document((ast.OperationDefinition((field,)),))
    assert "years: age" in print_document(doc)


@pytest.mark.parametrize("type_ref, text", [
    (NamedType("String"), "String"),
    (NonNullType(NamedType("String")), "String!"),
    (ListType(NamedType("Book")), "[Book]"),
    (NonNullType(ListType(NonNullType(NamedType("Book")))), "[Book!]!"),
])
def test_print_type_ref(type_ref, text):
    assert print_type_ref(type_ref) == text


def test_non_null_cannot_wrap_non_null():
    with pytest.raises(ValueError):
        NonNullType(NonNullType(NamedType("A")))


def test_invalid_type_name():
    with pytest.raises(ValueError):
        NamedType("1abc")


@pytest.mark.parametrize("value", ['say "hi"', "back\\slash", "tab\tnew\nline", "bell\x07", "ü€"])
def test_string_literals_round_trip(value):
    text = print_literal(ast.StringValue(value))
    doc = parse_document(f"{{ f(a: {text}) }}")
    assert doc.operations[0].selections[0].arguments[0].value == ast.StringValue(value)


def test_schema_round_trip(example_sdl):
    defs = parse_schema_document(example_sdl)
    assert parse_schema_document(print_schema(defs)) == defs


def test_schema_round_trip_keeps_descriptions():
    defs = parse_schema_document('# doc "quoted"\ntype A {\n  # field doc\n  a: String\n}\n'
                                 "enum E { X Y }")
    assert parse_schema_document(print_schema(defs)) == defs


def test_response_key():
    assert ast.Field("age").response_key == "age"
    assert ast.Field("age", alias="years").response_key == "years"


def test_ast_invariants():
    with pytest.raises(ValueError):
        ast.OperationDefinition(())
    with pytest.raises(ValueError):
        ast.Document(())
    op = ast.OperationDefinition((ast.Field("a"),), "X")
    with pytest.raises(ValueError):
        ast.Document((op, op))
    with pytest.raises(ValueError):
        ast.Field("a", arguments=(ast.Argument("x", ast.NullValue()),) * 2)
