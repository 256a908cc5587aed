import pytest

from planecolor.catalog import fig1a, fig1b
from planecolor.plane_graph import build

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def g1a():
    return fig1a()


@pytest.fixture
def g1b():
    return fig1b()


def c6_long_chord():
    """Hexagon 0..5 with the chord 0-3 (two 4-faces)."""
    return build([(1, 3, 5), (2, 0), (3, 1), (4, 0, 2), (5, 3), (0, 4)], range(6))


def k4():
    # 0, 1, 2 outer, 3 in the middle
    return build([(1, 3, 2), (2, 3, 0), (0, 3, 1), (0, 1, 2)], [0, 1, 2])
