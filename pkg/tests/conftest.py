from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from coxshell.complex import PureComplex, parse_facets  # noqa: E402
from coxshell.coxeter import new_system  # noqa: E402

DATA = Path(__file__).resolve().parent.parent / "data"

# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA


@pytest.fixture(scope="session")
def A2():
    return new_system("A2")


@pytest.fixture(scope="session")
def A3():
    return new_system("A3")


@pytest.fixture(scope="session")
def B3():
    return new_system("B3")


@pytest.fixture(scope="session")
def B4():
    return new_system("B4")


@pytest.fixture(scope="session")
def hachimori() -> PureComplex:
    return PureComplex.from_facets(parse_facets((DATA / "hachimori.facets").read_text()))


@pytest.fixture(scope="session")
def not_linear() -> PureComplex:
    return PureComplex.from_facets(parse_facets((DATA / "not_linear.facets").read_text()))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
