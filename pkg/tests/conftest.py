import pytest

from selfdual.constructions.drawings import DRAWN_G_EDGES, P66_RADIAL_ROTATION
from selfdual.planar_map import AbstractGraph
from selfdual.planar_map.solids import cube, octahedron, tetrahedron, wheel
from selfdual.verify import isomorphic


def same(a: AbstractGraph, b: AbstractGraph) -> bool:
    return isomorphic(a, b) is not None


def graph(order: int, edges: list[tuple[int, int]], one_based: bool = True) -> AbstractGraph:
    shift = 1 if one_based else 0
    return AbstractGraph.from_edges(order, [(u - shift, v - shift) for u, v in edges])


G7_EDGES = DRAWN_G_EDGES[7]
G8_EDGES = DRAWN_G_EDGES[8]


@pytest.fixture
def tetra():
    return tetrahedron()


@pytest.fixture
def cube_map():
    return cube()


@pytest.fixture
def octa():
    return octahedron()


@pytest.fixture
def wheel5():
    return wheel(5)


@pytest.fixture
def p66_radial_rotation():
    return P66_RADIAL_ROTATION
