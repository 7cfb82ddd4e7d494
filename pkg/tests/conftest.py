import pytest

from rigicert.graph import Graph
from rigicert.rigidity import enumerate_laman


def triangle() -> Graph:
    return Graph({0, 1, 2}, [(0, 1), (0, 2), (1, 2)])


def k4() -> Graph:
    return Graph(range(4), [(a, b) for a in range(4) for b in range(a + 1, 4)])


def k4_minus_edge() -> Graph:
    # missing edge (0,1); separation pair is {2,3}
    return Graph(range(4), [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def k5() -> Graph:
    return Graph(range(5), [(a, b) for a in range(5) for b in range(a + 1, 5)])


def k33(labels=(1, 4, 6, 2, 3, 5)) -> Graph:
    # parts are the first and last three labels
    left, right = labels[:3], labels[3:]
    return Graph(labels, [(a, b) for a in left for b in right])


def prism() -> Graph:
    return Graph(range(6), [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def g5() -> Graph:
    # K4 minus (0,1) glued with the path 0-4-1; separation pair {0,1}
    return Graph(range(5), [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4)])


def two_triangles() -> Graph:
    # triangles 0-1-2 and 1-2-3 sharing edge (1,2)
    return Graph(range(4), [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def four_cycle() -> Graph:
    return Graph(range(4), [(0, 1), (1, 2), (2, 3), (0, 3)])


@pytest.fixture(scope="session")
def census_by_n():
    return {n: enumerate_laman(n) for n in range(3, 9)}
