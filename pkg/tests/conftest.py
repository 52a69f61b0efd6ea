"""Shared configurations.  Matrices are given row by row; the columns are the vectors."""

import pytest

from zonoalg.matroid import GroundSet

K3 = [[1, 0, 1], [0, 1, -1]]
K4 = [[1, 0, 0, 1, 1, 0], [0, 1, 0, -1, 0, 1], [0, 0, 1, 0, -1, -1]]
EX33 = [[1, 1, 0, 1], [0, 0, 1, 1]]  # x1 = x2 = (1,0), x3 = (0,1), x4 = (1,1)
EX52 = [[1, 0, 0, 1, 1], [0, 1, 0, 2, 1], [0, 0, 1, 1, 1]]

# small corpus, unimodular and not; n <= 3, N <= 8
CORPUS = {
    "K3": K3,
    "K4": K4,
    "ex33": EX33,
    "ex52": EX52,
    "cube1": [[1]],
    "cube2": [[1, 0], [0, 1]],
    "cube3": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    "line": [[1, 1, 2]],
    "col12": [[1, 0, 1], [0, 1, 2]],
    "col12b": [[1, 0, 1, 1], [0, 1, 1, 2]],
    "det2": [[1, 0, 1, 1], [0, 1, 1, -1]],
    "twice": [[1, 1, 0], [0, 0, 1]],
    "skew3": [[1, 0, 0, 1, 2], [0, 1, 0, 2, 1], [0, 0, 1, 0, 1]],
    "K4plus2": [[1, 0, 0, 1, 1, 0, 1, 1], [0, 1, 0, -1, 0, 1, 1, 0], [0, 0, 1, 0, -1, -1, 0, 1]],
}


def gs(rows) -> GroundSet:
    return GroundSet.from_rows(rows)


@pytest.fixture
def k3():
    return gs(K3)


@pytest.fixture
def k4():
    return gs(K4)


@pytest.fixture
def ex33():
    return gs(EX33)


@pytest.fixture
def ex52():
    return gs(EX52)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
