import sys
from pathlib import Path

import pytest

from parkideal.multigraph import Multigraph, load_graph

DATA = Path(__file__).resolve().parent.parent / "data"

sys.path.insert(0, str(Path(__file__).resolve().parent))

# filled by test_acceptance, printed at the end of the session
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def two_components():
    return load_graph(DATA / "two_components.json")


@pytest.fixture
def cycle4():
    return Multigraph.from_edges(3, [(0, 1), (1, 2), (2, 3), (3, 0)])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
