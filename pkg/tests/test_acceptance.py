"""Exit criteria for the engine, one test (or group) per criterion.

Run ``pytest tests/test_acceptance.py`` to get a PASS/FAIL line per criterion
in the terminal summary.
"""

import itertools
import json
import os
import random
import signal
import socket
import subprocess
import sys
import time
import urllib.request

import pytest

from gqlengine import (SchemaError, bind_example_resolvers, build_schema_from_sdl, execute,
                       loads_dataset, parse_document, print_document, validate_document,
                       validate_schema)
from gqlengine.fixtures import fixture_path, read_fixture

from docgen import doc_depth, random_document, respace
from oracle import Oracle, Sel, to_text

criterion = pytest.mark.criterion

GOLDEN_RESULT = {"data": {"person": {
    "name": "Alice",
    "years": 31,
    "books": [{"title": "Moby-Dick", "authors": [{"name": "H. Melville"}]}],
}}}


def fresh_schema():
    return bind_example_resolvers(build_schema_from_sdl(read_fixture("fig4.graphql")),
                                  loads_dataset(read_fixture("example.json")))


@criterion(1)
def test_golden_sample_query():
    start = time.perf_counter()
    schema = fresh_schema()
    result = execute(schema, read_fixture("getAlice.graphql"))
    elapsed = time.perf_counter() - start
    assert result.to_data() == GOLDEN_RESULT
    assert list(result.data["person"]) == ["name", "years", "books"]
    assert elapsed < 0.100, f"took {elapsed * 1000:.1f} ms"


@criterion(2)
def test_alias_semantics():
    schema = fresh_schema()
    text = read_fixture("getAlice.graphql")
    aliased = execute(schema, text).data["person"]
    plain = execute(schema, text.replace("years: age", "age")).data["person"]
    assert aliased["years"] == 31 and "age" not in aliased
    assert plain["age"] == 31 and "years" not in plain
    assert list(plain) == ["name", "age", "books"]


BOOKS = (Sel("title"), Sel("authors", children=(Sel("name"),)))


@criterion(3)
@pytest.mark.parametrize("who, args, expected", [
    ("Alice", {"favourite": True}, [{"title": "Moby-Dick"}]),
    ("Bob", {"favourite": True}, [{"title": "Robinson Crusoe"}, None]),
    ("Bob", {}, [{"title": "Moby-Dick"}]),
])
def test_favourite_filtering(who, args, expected):
    query = (Sel("person", {"name": who}, (Sel("books", args, (Sel("title"),)),)),)
    result = execute(fresh_schema(), to_text(query))
    oracle_data, oracle_errors = Oracle().run(query)

    assert result.data == {"person": {"books": expected}}
    assert result.data == oracle_data
    assert [e.path for e in result.errors] == oracle_errors
    if who == "Bob" and args:
        assert [e.path for e in result.errors] == [("person", "books", 1)]
    else:
        assert result.errors == []


@criterion(4)
@pytest.mark.parametrize("query, expected", [
    (read_fixture("getAlice.graphql"), []),
    ('{ person(name:"Alice"){ salary } }',
     [("unknown field salary on Person", ("person", "salary"))]),
    ("{ person { name } }",
     [("missing required argument name", ("person", "name"))]),
    ('{ person(name:"Alice") }',
     [("object field person requires selection set", ("person",))]),
])
def test_validation_suite(query, expected):
    schema = build_schema_from_sdl(read_fixture("fig4.graphql"))
    found = validate_document(schema, parse_document(query))
    assert [(d.message, d.path) for d in found] == expected
    assert all(d.severity == "error" for d in found)


@criterion(5)
def test_schema_gate():
    sdl = read_fixture("fig4.graphql")
    assert validate_schema(build_schema_from_sdl(sdl)) == []

    without_query = sdl[:sdl.index("type Query")]
    with pytest.raises(SchemaError) as info:
        build_schema_from_sdl(without_query)
    assert [d.message for d in info.value.diagnostics] == ["root type Query missing"]

    dangling = sdl.replace("friends: [Person]", "friends: [Person]\n   pet: Animal")
    with pytest.raises(SchemaError) as info:
        build_schema_from_sdl(dangling)
    assert [(d.message, d.path) for d in info.value.diagnostics] == [
        ("unresolved type Animal", ("Person", "pet"))]


@criterion(6)
def test_parser_round_trip_property():
    rng = random.Random(20161016)
    checked = 0
    for _ in range(1000):
        doc = random_document(rng, max_depth=6, max_fields=5)
        assert doc_depth(doc) <= 6
        text = print_document(doc)
        assert parse_document(text) == doc
        assert parse_document(respace(rng, text)) == doc
        checked += 1
    assert checked >= 1000


def _enumerate_queries():
    book_subsets = [s for r in (1, 2) for s in itertools.combinations(BOOKS, r)]
    book_options = [None]
    for fav in (None, True, False):
        args = {} if fav is None else {"favourite": fav}
        book_options += [Sel("books", args, subset) for subset in book_subsets]
    simple = [Sel("name"), Sel("age"), Sel("friends", children=(Sel("name"),))]
    for who in ("Alice", "Bob"):
        for r in range(len(simple) + 1):
            for chosen in itertools.combinations(simple, r):
                for books in book_options:
                    sels = list(chosen) + ([books] if books else [])
                    if not sels:
                        continue
                    orders = [tuple(sels)]
                    if len(sels) > 1:
                        orders.append(tuple(reversed(sels)))
                    for order in orders:
                        yield (Sel("person", {"name": who}, order),)


@criterion(7)
def test_oracle_equivalence():
    schema = fresh_schema()
    oracle = Oracle()
    queries = list(_enumerate_queries())
    assert len(queries) >= 200
    start = time.perf_counter()
    for q in queries:
        result = execute(schema, to_text(q))
        data, errors = oracle.run(q)
        assert result.data == data, to_text(q)
        assert list(json.dumps(result.data)) == list(json.dumps(data)), "key order differs"
        assert [e.path for e in result.errors] == errors
    assert time.perf_counter() - start < 10


@criterion(8)
def test_recursion_terminates():
    result = execute(fresh_schema(),
                     '{ person(name:"Alice"){ friends { friends { friends { name } } } } }')
    assert result.errors == []
    level1 = result.data["person"]["friends"]
    assert [len(f["friends"]) for f in level1] == [2, 1]
    leaf = level1[1]["friends"][0]["friends"][0]
    assert leaf == {"name": "Bob"}
    depth, node = 0, result.data["person"]
    while "friends" in node:
        node = node["friends"][0]
        depth += 1
    assert depth == 3
    assert Oracle().run((Sel("person", {"name": "Alice"}, (
        Sel("friends", children=(Sel("friends", children=(
            Sel("friends", children=(Sel("name"),)),)),)),)),))[0] == result.data


@criterion(9)
def test_introspection():
    result = execute(fresh_schema(), '{ __type(name:"Person"){ name fields { name type } } }')
    assert result.errors == []
    assert result.data == {"__type": {"name": "Person", "fields": [
        {"name": "name", "type": "String!"},
        {"name": "age", "type": "Integer"},
        {"name": "books", "type": "[Book]"},
        {"name": "friends", "type": "[Person]"},
    ]}}


def _free_port():
    with socket.socket() as s:
        s.bind(("127.0.0.1", 0))
        return s.getsockname()[1]


@criterion(10)
def test_wire_conformance():
    port = _free_port()
    env = dict(os.environ, GQL_PORT=str(port), PYTHONUNBUFFERED="1")
    proc = subprocess.Popen(
        [sys.executable, "-m", "gqlengine", "serve", "--schema", str(fixture_path("fig4.graphql")),
         "--data", str(fixture_path("example.json"))],
        stdout=subprocess.PIPE, stderr=subprocess.PIPE, text=True, env=env)
    try:
        line = proc.stdout.readline()
        assert f":{port}/graphql" in line, proc.stderr.read() if proc.poll() is not None else line
        body = json.dumps({"query": read_fixture("getAlice.graphql")}).encode()
        bodies = []
        for _ in range(5):
            req = urllib.request.Request(f"http://127.0.0.1:{port}/graphql", data=body,
                                         headers={"Content-Type": "application/json"})
            with urllib.request.urlopen(req, timeout=5) as resp:
                assert resp.status == 200
                assert resp.headers["Content-Type"] == "application/json"
                bodies.append(resp.read())
        assert len(set(bodies)) == 1
        assert json.loads(bodies[0]) == GOLDEN_RESULT
    finally:
        proc.send_signal(signal.SIGINT)
        try:
            proc.wait(5)
        except subprocess.TimeoutExpired:
            proc.kill()
    assert proc.returncode == 0
