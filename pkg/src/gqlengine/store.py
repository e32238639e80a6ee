"""In-memory entity store and the resolvers for the person/book example.

Dataset format::

    {"person": [{"id": 1, "name": "Alice", "age": 31, "friends": [1, 2],
                 "books": [2], "favourites": [2]}, ...],
     "book": [{"id": 1, "title": "Robinson Crusoe", "authors": [4]}, ...]}

Ids referenced from other records are not required to exist.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from types import MappingProxyType

from .errors import ResolverFailure, UnknownType
from .execution import Opaque
from .schema import ObjectType, ResolveContext, Schema


class FormatError(ValueError):
    def __init__(self, message: str, path: str = "$"):
        self.path = path
        super().__init__(f"{path}: {message}")


@dataclass(frozen=True)
class _Column:
    required: bool
    kind: str  # "str", "int", "ids"


_TABLE_COLUMNS = {
    "person": {
        "name": _Column(True, "str"),
        "age": _Column(False, "int"),
        "friends": _Column(False, "ids"),
        "books": _Column(False, "ids"),
        "favourites": _Column(False, "ids"),
    },
    "book": {
        "title": _Column(True, "str"),
        "authors": _Column(False, "ids"),
    },
}


def _is_int(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


class EntityStore:
    """Read-only tables of records keyed by integer id."""

    def __init__(self, tables: dict[str, dict[int, dict]]):
        self.tables = MappingProxyType({
            name: MappingProxyType({i: MappingProxyType(dict(rec)) for i, rec in rows.items()})
            for name, rows in tables.items()
        })

    def table(self, name: str):
        return self.tables.get(name, {})

    def get(self, table: str, entity_id):
        return self.table(table).get(entity_id)

    def find(self, table: str, column: str, value):
        """Records whose ``column`` equals ``value`` exactly, in id order."""
        return [r for r in self.table(table).values() if r.get(column) == value]

    def __len__(self):
        return sum(len(rows) for rows in self.tables.values())


def _check_record(table: str, index: int, rec) -> dict:
    where = f"$.{table}[{index}]"
    if not isinstance(rec, dict):
        raise FormatError("record must be an object", where)
    if not _is_int(rec.get("id")):
        raise FormatError("id must be an integer", where + ".id")
    out = dict(rec)
    for column, spec in _TABLE_COLUMNS.get(table, {}).items():
        value = rec.get(column)
        cpath = f"{where}.{column}"
        if value is None:
            if spec.required:
                raise FormatError(f"{column} is required", cpath)
            out[column] = [] if spec.kind == "ids" else None
        elif spec.kind == "str" and not isinstance(value, str):
            raise FormatError(f"{column} must be a string", cpath)
        elif spec.kind == "int" and not _is_int(value):
            raise FormatError(f"{column} must be an integer", cpath)
        elif spec.kind == "ids":
            if not isinstance(value, list) or not all(_is_int(v) for v in value):
                raise FormatError(f"{column} must be a list of integer ids", cpath)
    return out


def loads_dataset(text: str) -> EntityStore:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON: {e.msg} at line {e.lineno} column {e.colno}") from None
    if not isinstance(doc, dict):
        raise FormatError("dataset must be a JSON object")
    tables = {}
    for table, rows in doc.items():
        if not isinstance(rows, list):
            raise FormatError("table must be a list of records", f"$.{table}")
        by_id: dict[int, dict] = {}
        for i, rec in enumerate(rows):
            rec = _check_record(table, i, rec)
            if rec["id"] in by_id:
                raise FormatError(f"duplicate id {rec['id']}", f"$.{table}[{i}].id")
            by_id[rec["id"]] = rec
        tables[table] = by_id
    for table in _TABLE_COLUMNS:
        tables.setdefault(table, {})
    return EntityStore(tables)


def load_dataset(source) -> EntityStore:
    """Load a dataset from a path or an open text file."""
    if isinstance(source, (str, os.PathLike)):
        with open(source, encoding="utf-8") as fh:
            return loads_dataset(fh.read())
    return loads_dataset(source.read())


# -- resolvers -----------------------------------------------------------------


def _lookup(store: EntityStore, table: str, key_column: str, ctx: ResolveContext):
    # Prefer the argument; fall back to the id when the argument matches nothing.
    if key_column in ctx.args:
        for rec in store.find(table, key_column, ctx.args[key_column]):
            if ctx.id is None or rec["id"] == ctx.id:
                return rec
    if ctx.id is not None:
        rec = store.get(table, ctx.id)
        if rec is not None:
            return rec
    raise ResolverFailure(f"no {table} matches")


def person_type_resolver(store: EntityStore):
    def resolve_person(ctx: ResolveContext):
        rec = _lookup(store, "person", "name", ctx)
        return {
            "name": rec["name"],
            "age": rec["age"],
            "friends": list(rec["friends"]),
            "books": Opaque((tuple(rec["books"]), tuple(rec["favourites"]))),
        }
    return resolve_person


def book_type_resolver(store: EntityStore):
    def resolve_book(ctx: ResolveContext):
        rec = _lookup(store, "book", "title", ctx)
        return {"title": rec["title"], "authors": list(rec["authors"])}
    return resolve_book


def person_books_field_resolver():
    """Pick all books or only favourites out of the person's ``(all, favs)`` pair."""

    def resolve_person_books(ctx: ResolveContext):
        packed = (ctx.parent or {}).get("books")
        if not isinstance(packed, Opaque):
            raise ResolverFailure("parent has no book lists")
        all_books, favourites = packed.value
        return list(favourites if ctx.args.get("favourite") is True else all_books)
    return resolve_person_books


def book_search_resolver(store: EntityStore):
    """``Query.books(filter)``: case-insensitive substring match on titles."""

    def resolve_books(ctx: ResolveContext):
        needle = ctx.args.get("filter")
        ids = []
        for book_id, rec in sorted(store.table("book").items()):
            if needle is None or needle.casefold() in rec["title"].casefold():
                ids.append(book_id)
        return ids
    return resolve_books


def bind_example_resolvers(schema: Schema, store: EntityStore) -> Schema:
    for name in ("Person", "Book"):
        if not isinstance(schema.types.get(name), ObjectType):
            raise UnknownType(f"no object type named {name!r}")
    schema.register_type_resolver("Person", person_type_resolver(store))
    schema.register_field_resolver("Person", "books", person_books_field_resolver())
    schema.register_type_resolver("Book", book_type_resolver(store))
    query = schema.types.get("Query")
    if query is not None and "books" in query.fields:
        schema.register_field_resolver("Query", "books", book_search_resolver(store))
    return schema
