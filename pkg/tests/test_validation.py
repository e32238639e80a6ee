import pytest

from gqlengine import ast
from gqlengine.errors import CoercionError
from gqlengine.parser import parse_document
from gqlengine.schema import build_schema_from_sdl
from gqlengine.validation import coerce_arguments, validate_document


def diags(schema, source):
    return [(d.message, d.path) for d in validate_document(schema, parse_document(source))]


def test_sample_query_is_valid(example_schema, get_alice):
    assert diags(example_schema, get_alice) == []


def test_unknown_field(example_schema):
    assert diags(example_schema, '{ person(name:"Alice"){ salary } }') == [
        ("unknown field salary on Person", ("person", "salary"))]


def test_missing_required_argument(example_schema):
    assert diags(example_schema, "{ person { name } }") == [
        ("missing required argument name", ("person", "name"))]


def test_object_field_needs_selection(example_schema):
    assert diags(example_schema, '{ person(name:"Alice") }') == [
        ("object field person requires selection set", ("person",))]


def test_leaf_field_rejects_selection(example_schema):
    assert diags(example_schema, '{ person(name:"A"){ name { x } } }') == [
        ("leaf field name of type String must not have a selection set", ("person", "name"))]


def test_unknown_argument(example_schema):
    assert diags(example_schema, '{ person(name:"A", nick:"B"){ name } }') == [
        ("unknown argument nick on field Query.person", ("person", "nick"))]


def test_argument_kind_mismatch(example_schema):
    (d,) = diags(example_schema, '{ person(name:"A"){ books(favourite: "yes") { title } } }')
    assert d[1] == ("person", "books", "favourite")
    assert "expected Boolean" in d[0]


def test_null_for_required_argument(example_schema):
    (d,) = diags(example_schema, "{ person(name: null){ name } }")
    assert d[1] == ("person", "name")


def test_duplicate_response_key(example_schema):
    assert diags(example_schema, '{ person(name:"A"){ n: name n: age } }') == [
        ("duplicate response key n", ("person", "n"))]


def test_diagnostics_in_document_order(example_schema):
    found = diags(example_schema, '{ a person(name:"A"){ b books { c } } d }')
    assert [p for _, p in found] == [("a",), ("person", "b"), ("person", "books", "c"), ("d",)]


def test_list_nesting_is_implicit():
    list_schema = build_schema_from_sdl("type B { t: String } type Query { b: [B] }")
    single_schema = build_schema_from_sdl("type B { t: String } type Query { b: B }")
    q = "{ b { t } }"
    assert diags(list_schema, q) == diags(single_schema, q) == []


def test_introspection_fields_validate(example_schema):
    assert diags(example_schema, '{ __type(name:"Person"){ name kind fields { name type } } }') == []
    assert diags(example_schema, '{ person(name:"A"){ __typename } }') == []
    assert diags(example_schema, "{ __type { name } }") == [
        ("missing required argument name", ("__type", "name"))]


def test_validation_never_calls_resolvers(example_schema, get_alice):
    def boom(ctx):
        raise AssertionError("resolver called")
    example_schema.register_type_resolver("Person", boom)
    example_schema.register_type_resolver("Book", boom)
    validate_document(example_schema, parse_document(get_alice))


# -- coercion --


def test_coerce_string(example_schema):
    person = example_schema.query_type.fields["person"]
    assert coerce_arguments(example_schema, person, {"name": ast.StringValue("Alice")}) == {
        "name": "Alice"}


def test_coerce_empty(example_schema):
    books = example_schema.lookup_type("Person").fields["books"]
    assert coerce_arguments(example_schema, books, {}) == {}


def test_coerce_mismatch(example_schema):
    books = example_schema.lookup_type("Person").fields["books"]
    with pytest.raises(CoercionError):
        coerce_arguments(example_schema, books, {"favourite": ast.StringValue("yes")})
    with pytest.raises(CoercionError):
        coerce_arguments(example_schema, books, {"favourite": ast.IntValue(1)})


def test_coerce_missing_required(example_schema):
    with pytest.raises(CoercionError, match="missing required argument name"):
        coerce_arguments(example_schema, example_schema.query_type.fields["person"], {})


@pytest.fixture
def typed_schema():
    return build_schema_from_sdl(
        "enum Color { RED GREEN }\n"
        "type Query { f(i: Integer, x: Float, b: Boolean, id: ID, c: Color, l: [Integer]): String }")


@pytest.mark.parametrize("arg, lit, value", [
    ("i", ast.IntValue(-4), -4),
    ("x", ast.IntValue(3), 3.0),
    ("b", ast.BooleanValue(False), False),
    ("id", ast.IntValue(7), "7"),
    ("id", ast.StringValue("k"), "k"),
    ("c", ast.EnumValue("GREEN"), "GREEN"),
    ("l", ast.IntValue(1), [1]),
    ("i", ast.NullValue(), None),
])
def test_coerce_kinds(typed_schema, arg, lit, value):
    f = typed_schema.query_type.fields["f"]
    out = coerce_arguments(typed_schema, f, {arg: lit})
    assert out == {arg: value}
    assert type(out[arg]) is type(value)


@pytest.mark.parametrize("arg, lit", [
    ("c", ast.EnumValue("BLUE")),
    ("c", ast.StringValue("RED")),
    ("i", ast.StringValue("1")),
    ("i", ast.EnumValue("ONE")),
    ("b", ast.IntValue(0)),
])
def test_coerce_rejects(typed_schema, arg, lit):
    with pytest.raises(CoercionError):
        coerce_arguments(typed_schema, typed_schema.query_type.fields["f"], {arg: lit})
