import pytest

from coxmut import Diagram

# one line per acceptance criterion, echoed after the run (see test_acceptance)
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def a3_path():
    return Diagram.from_arrows(3, [(1, 2, 1), (2, 3, 1)])


@pytest.fixture(scope="session")
def g2_triangle():
    """The (3,3,4) triangle in the orientation of the worked mutation example."""
    return Diagram.from_arrows(3, [(2, 1, 3), (3, 2, 3), (1, 3, 4)])


def oriented_cycle(weights):
    d = len(weights)
    return Diagram.from_arrows(
        d, [(i + 1, i + 2 if i + 1 < d else 1, weights[i]) for i in range(d)]
    )


def weighted_path(weights):
    n = len(weights) + 1
    return Diagram.from_arrows(n, [(i + 1, i + 2, weights[i]) for i in range(n - 1)])
