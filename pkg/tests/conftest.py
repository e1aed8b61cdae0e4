import json

import pytest

from monores.io import fixture_path, load_fixture


def listed_generators(name):
    """Generators in the order they were written down in the fixture."""
    return [tuple(g) for g in json.loads(fixture_path(name).read_text())["generators"]]


class Numbered:
    """Translate between 1-based positions in a written generator list and
    canonical (lex-sorted, 0-based) indices."""

    def __init__(self, name):
        self.ideal = load_fixture(name)
        self.listed = listed_generators(name)
        self._to = {k + 1: self.ideal.index(g) for k, g in enumerate(self.listed)}
        self._from = {v: k for k, v in self._to.items()}

    def face(self, *written):
        return tuple(sorted(self._to[k] for k in written))

    def written(self, face):
        return tuple(sorted(self._from[v] for v in face))


@pytest.fixture
def ex14():
    return Numbered("example_1_4")


@pytest.fixture
def ex47():
    return Numbered("example_4_7")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
