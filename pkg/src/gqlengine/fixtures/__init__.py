"""Bundled example schema, dataset and query."""

from importlib.resources import files


def fixture_path(name: str):
    return files(__name__).joinpath(name)


def read_fixture(name: str) -> str:
    return fixture_path(name).read_text(encoding="utf-8")
