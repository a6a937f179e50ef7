import random

import pytest
from conftest import same

from selfdual.constructions import DegreeTuple, algorithm_one, construct_Q, construct_S
from selfdual.errors import (
    InconsistentRotation,
    InvalidParameter,
    NonPlanarEmbedding,
    NotAnEdge,
    NotTwoConnected,
    VertexNotOnFace,
)
from selfdual.planar_map import (
    DegreeMode,
    DegreeSequence,
    build_map,
    build_map_from_faces,
    degree_sequence,
    dual,
    edge_split,
    every_four_cycle_bounds_face,
    faces,
    induced_by_degree,
    is_polyhedral_map,
    is_three_connected,
    primal_from_radial,
    radial,
)
from selfdual.planar_map.solids import bipyramid, cycle_map, prism, wheel


@pytest.mark.parametrize(
    "m, counts",
    [
        (wheel(3), (4, 6, 4)),
        (prism(4), (8, 12, 6)),
        (bipyramid(4), (6, 12, 8)),
        (prism(5), (10, 15, 7)),
        (wheel(5), (6, 10, 6)),
        (bipyramid(5), (7, 15, 10)),
    ],
)
def test_solid_counts(m, counts):
    assert (m.num_vertices, m.num_edges, m.num_faces) == counts
    assert is_polyhedral_map(m)


def test_solids_reject_small_n():
    with pytest.raises(InvalidParameter):
        wheel(2)


def test_k5_rotation_is_not_planar():
    """Whatever the rotation, K5 cannot satisfy Euler's relation."""
    with pytest.raises(NonPlanarEmbedding):
        build_map({i: [j for j in range(5) if j != i] for i in range(5)})


def test_unknown_neighbour_is_rejected():
    with pytest.raises(InconsistentRotation):
        build_map({0: [1], 1: [2]})


def test_dual_of_cube_is_octahedron(cube_map, octa):
    assert same(dual(cube_map).underlying(), octa.underlying())


@pytest.mark.parametrize("m", [prism(4), wheel(6), bipyramid(5)])
def test_dual_is_an_involution(m):
    assert same(dual(dual(m)).underlying(), m.underlying())


def test_radial_counts(cube_map):
    r = radial(cube_map)
    assert r.map.num_vertices == 8 + 6
    assert r.map.num_edges == 24
    assert r.map.num_faces == 12
    assert r.is_bipartite() and r.is_quadrangulation()


def test_radial_of_map_and_dual_agree(cube_map):
    assert same(radial(cube_map).map.underlying(), radial(dual(cube_map)).map.underlying())


@pytest.mark.parametrize("m", [prism(5), wheel(6), bipyramid(4), construct_S(7, 5), construct_Q(5, 4)])
def test_radial_is_shared_with_the_dual(m):
    assert same(radial(m).map.underlying(), radial(dual(m)).map.underlying())


@pytest.mark.parametrize("n", range(3, 7))
def test_dual_of_prism_is_bipyramid(n):
    assert same(dual(prism(n)).underlying(), bipyramid(n).underlying())
    assert same(dual(bipyramid(n)).underlying(), prism(n).underlying())


@pytest.mark.parametrize("m", [prism(4), wheel(7), bipyramid(4)])
def test_primal_from_radial_round_trip(m):
    assert same(primal_from_radial(radial(m)).underlying(), m.underlying())


def test_radial_criterion_matches_polyhedrality(cube_map):
    assert every_four_cycle_bounds_face(radial(cube_map))
    square = cycle_map(4)
    assert not is_polyhedral_map(square)
    assert not every_four_cycle_bounds_face(radial(square))


def test_radial_rejects_a_path():
    path = build_map({0: [1], 1: [0, 2], 2: [1]})
    with pytest.raises(NotTwoConnected):
        radial(path)


@pytest.mark.parametrize("seed", range(12))
def test_edge_split_keeps_random_polyhedra_polyhedral(seed):
    rng = random.Random(seed)
    T = DegreeTuple(tuple(rng.randint(4, 8) for _ in range(rng.randint(1, 4))))
    _, m = algorithm_one(T)
    for step in range(1, 6):
        d = rng.randrange(m.num_darts)
        a, b = m.tails[d], m.head(d)
        c = rng.choice([v for v in m.face_walk(m.face_of[d]) if v not in (a, b)])
        m = edge_split(m, a, b, c)
        assert m.num_vertices == T.order + step
        assert is_polyhedral_map(m), (T, a, b, c)


def test_edge_split_in_wheel(wheel5):
    split = edge_split(wheel5, 0, 1, 5)
    assert split.num_vertices == 7
    assert split.num_edges == 12
    assert split.degree(5) == 6
    assert split.degree(6) == 3
    assert is_polyhedral_map(split)


def test_edge_split_errors(cube_map):
    with pytest.raises(NotAnEdge):
        edge_split(cube_map, 0, 2, 5)
    with pytest.raises(VertexNotOnFace):
        edge_split(cube_map, 0, 1, 6)


def test_faces_of_cube_are_squares(cube_map):
    assert sorted(len(f) for f in faces(cube_map)) == [4] * 6


def test_degree_sequence_notation():
    seq = DegreeSequence.parse("4,4,3^4")
    assert seq.values == (4, 4, 3, 3, 3, 3)
    assert seq.notation() == "4^2,3^4"
    assert seq.is_even() and seq.is_graphic()
    assert not DegreeSequence.parse("3,3,1").is_graphic()
    assert degree_sequence(wheel(5)) == DegreeSequence.parse("5,3^5")


def test_three_connectivity(cube_map):
    assert is_three_connected(cube_map.underlying())
    assert not is_three_connected(cycle_map(5).underlying())


def test_induced_by_degree_partitions_vertices(wheel5):
    g = wheel5.underlying()
    h3 = induced_by_degree(g, DegreeMode.EXACTLY_3)
    hplus = induced_by_degree(g, "at-least-4")
    assert h3.order + hplus.order == g.order
    assert h3.size == 5 and hplus.order == 1


def test_build_map_from_faces(tetra):
    m = build_map_from_faces([(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)])
    assert (m.num_vertices, m.num_edges, m.num_faces) == (4, 6, 4)
    assert same(m.underlying(), tetra.underlying())


def test_build_map_from_faces_needs_both_sides():
    with pytest.raises(InconsistentRotation):
        build_map_from_faces([(0, 1, 2)])
