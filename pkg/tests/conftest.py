import pytest

from gqlengine import bind_example_resolvers, build_schema_from_sdl, loads_dataset
from gqlengine.fixtures import read_fixture

_criteria: dict[int, list[str]] = {}


@pytest.fixture
def example_sdl():
    return read_fixture("fig4.graphql")


@pytest.fixture
def get_alice():
    return read_fixture("getAlice.graphql")


@pytest.fixture
def example_schema(example_sdl):
    """The example schema with no resolvers bound."""
    return build_schema_from_sdl(example_sdl)


@pytest.fixture
def store():
    return loads_dataset(read_fixture("example.json"))


@pytest.fixture
def schema(example_schema, store):
    return bind_example_resolvers(example_schema, store)


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    for name, marks in report.user_properties:
        if name == "criteria":
            for n in marks:
                _criteria.setdefault(n, []).append(report.outcome)


def pytest_collection_modifyitems(items):
    for item in items:
        marks = [m.args[0] for m in item.iter_markers("criterion")]
        if marks:
            item.user_properties.append(("criteria", marks))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        outcomes = _criteria[n]
        status = "PASS" if all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"criterion {n:2d}: {status} ({len(outcomes)} checks)")


class _SchemaFactory:
    """Fresh bound schemas for hypothesis tests, which cannot use function fixtures."""

    def __call__(self):
        return bind_example_resolvers(build_schema_from_sdl(read_fixture("fig4.graphql")),
                                      loads_dataset(read_fixture("example.json")))

    @staticmethod
    def execute(schema, source):
        from gqlengine.execution import execute
        return execute(schema, source)


@pytest.fixture(scope="session")
def schema_factory():
    return _SchemaFactory()
