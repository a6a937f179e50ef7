import pytest
from conftest import G7_EDGES, G8_EDGES, graph, same
from loguru import logger

from selfdual.constructions import (
    DegreeTuple,
    LabeledPolyhedron,
    RelabelMode,
    algorithm_one,
    algorithm_two_step,
    construct_G,
    construct_G_labelled,
    construct_P_prime,
    construct_Q,
    construct_S,
    high_degree_indices,
    labelled_g6,
    relabel_after_z,
    run_algorithm_one,
    seed_cube,
    seed_green,
    z_transform,
)
from selfdual.constructions.drawings import DRAWN_G_EDGES, drawn_map, matches_drawing
from selfdual.constructions.seeds import green_incidences
from selfdual.errors import InvalidCursor, InvalidParameter, InvalidTuple, PreconditionViolated
from selfdual.planar_map import (
    DegreeSequence,
    LabeledRadial,
    PlanarMap,
    degree_sequence,
    is_polyhedral_map,
    primal_from_radial,
    radial,
)
from selfdual.planar_map.solids import tetrahedron, wheel
from selfdual.verify import canonical_form, check_phi, degree_fingerprint, is_self_dual

# ---------------------------------------------------------------------- tuples


def test_tuple_arithmetic():
    T = DegreeTuple.parse("(6,5,6)")
    assert T.entries == (6, 5, 6)
    assert T.m == 9
    assert T.order == 12
    assert T.applications == 8
    assert T.target_sequence() == DegreeSequence.parse("6,6,5,3^9")
    assert str(T) == "(6,5,6)"


def test_tuple_rejects_small_entries():
    with pytest.raises(InvalidTuple):
        DegreeTuple((5, 3))
    with pytest.raises(InvalidTuple):
        DegreeTuple.parse("6,x")


def test_tuple_from_sequence():
    assert DegreeTuple.from_sequence(DegreeSequence.parse("5,4,3^5")).entries == (5, 4)
    with pytest.raises(InvalidTuple):
        DegreeTuple.from_sequence(DegreeSequence.parse("5,4,3^4"))


@pytest.mark.parametrize(
    "entries, expected",
    [((6, 5, 6), [3, 6, 8]), ((5, 4, 4, 6), [3, 5, 6, 7]), ((4,), [3])],
)
def test_high_degree_indices(entries, expected):
    assert high_degree_indices(DegreeTuple(entries)) == expected


# ---------------------------------------------------------------------- seeds and Z


def test_seed_cube():
    r = seed_cube()
    assert (r.map.num_vertices, r.map.num_edges) == (8, 12)
    assert r.is_bipartite() and r.is_quadrangulation()
    assert same(primal_from_radial(r).underlying(), tetrahedron().underlying())
    assert r.map.find_dart(r.vertex("v1"), r.vertex("f4")) is None
    assert all(r.map.find_dart(r.vertex("v1"), r.vertex(f"f{j}")) is not None for j in (1, 2, 3))
    assert check_phi(r)


def test_z_transform_grows_c_and_C():
    r = seed_cube()
    c, C = r.cursor.c, r.cursor.C
    out = z_transform(r)
    assert (out.map.num_vertices, out.map.num_edges, out.map.num_faces) == (10, 16, 8)
    assert out.map.degree(c) == r.map.degree(c) + 1
    assert out.map.degree(C) == r.map.degree(C) + 1
    d, D = out.last_inserted
    assert out.name(d) == "v5" and out.name(D) == "f5"
    assert same(primal_from_radial(out).underlying(), wheel(4).underlying())
    assert check_phi(out)


def test_z_needs_a_relabel_first():
    out = z_transform(seed_cube())
    with pytest.raises(InvalidCursor):
        z_transform(out)


def test_relabel_modes_only_move_the_cursor():
    out = z_transform(seed_cube())
    kept = relabel_after_z(out, RelabelMode.CONTINUE)
    assert kept.map is out.map
    assert (kept.cursor.c, kept.cursor.C) == (out.cursor.c, out.cursor.C)
    assert kept.cursor.b == out.last_inserted[0]

    moved = relabel_after_z(out, "advance")
    assert (moved.cursor.a, moved.cursor.A) == (out.cursor.c, out.cursor.C)
    assert (moved.cursor.c, moved.cursor.C) == (out.cursor.b, out.cursor.B)


def test_relabel_without_z_is_rejected():
    with pytest.raises(InvalidCursor):
        relabel_after_z(seed_cube(), RelabelMode.CONTINUE)


# ---------------------------------------------------------------------- Algorithm 1


def test_empty_tuple_gives_tetrahedron():
    _, P = algorithm_one(DegreeTuple(()))
    assert same(P.underlying(), tetrahedron().underlying())


@pytest.mark.parametrize("x", range(4, 9))
def test_single_entry_gives_pyramid(x):
    _, P = algorithm_one(DegreeTuple((x,)))
    assert same(P.underlying(), wheel(x).underlying())


@pytest.mark.parametrize("entries", [(6, 6), (6, 5, 6), (5, 4, 4, 6), (4, 4, 4, 4), (9, 4, 7)])
def test_algorithm_one_output(entries):
    T = DegreeTuple(entries)
    run = run_algorithm_one(T, validate=True)
    assert run.applications == T.applications
    assert run.polytope.num_vertices == T.order
    assert degree_sequence(run.polytope) == T.target_sequence()
    assert is_polyhedral_map(run.polytope)
    assert check_phi(run.radial)
    assert is_self_dual(run.polytope)


def test_p66_is_s66():
    r, P = algorithm_one(DegreeTuple((6, 6)))
    assert same(P.underlying(), construct_S(6, 6).underlying())
    assert same(r.map.underlying(), radial(construct_S(6, 6)).map.underlying())


def test_p66_radial_matches_its_drawing(p66_radial_rotation):
    r, _ = algorithm_one(DegreeTuple((6, 6)))
    assert matches_drawing(r.map, r.names(), p66_radial_rotation)
    assert same(r.map.underlying(), drawn_map(p66_radial_rotation).underlying())


def test_drawing_rejects_a_different_radial(p66_radial_rotation):
    r, _ = algorithm_one(DegreeTuple((6, 6)))
    names = list(r.names())
    i, j = names.index("v3"), names.index("v4")
    names[i], names[j] = names[j], names[i]
    assert not matches_drawing(r.map, names, p66_radial_rotation)


def test_edits_per_application_are_constant():
    small = run_algorithm_one(DegreeTuple((6, 6)))
    large = run_algorithm_one(DegreeTuple((9,) * 30))
    assert small.edits * large.applications == large.edits * small.applications


def _mirrored(r: LabeledRadial) -> LabeledRadial:
    inverse = [0] * r.map.num_darts
    for d, x in enumerate(r.map.rotation):
        inverse[x] = d
    return LabeledRadial(PlanarMap(r.map.tails, tuple(inverse), r.map.labels), r.classes, r.indices, r.cursor)


def test_mirrored_seed_grows_the_same_polytope():
    T = DegreeTuple((6, 5, 6))
    plain = run_algorithm_one(T)
    mirrored = run_algorithm_one(T, seed=_mirrored(seed_cube()), validate=True)
    assert mirrored.edits == plain.edits
    assert same(mirrored.polytope.underlying(), plain.polytope.underlying())
    assert check_phi(mirrored.radial)


def test_long_run_keeps_every_invariant():
    T = DegreeTuple((9,) * 30)
    run = run_algorithm_one(T, validate=True)
    assert degree_sequence(run.polytope) == T.target_sequence()
    assert check_phi(run.radial)
    assert is_polyhedral_map(run.polytope)


def test_run_logs_the_size_of_the_tuple():
    messages: list[str] = []
    sink = logger.add(messages.append, level="DEBUG", format="{message}")
    try:
        run_algorithm_one(DegreeTuple((6, 5, 6)))
    finally:
        logger.remove(sink)
    assert any("k=3, order 12: 8 applications" in m for m in messages)
    assert not any("(6,5,6)" in m for m in messages)


def test_stop_after_truncates_the_tuple():
    run = run_algorithm_one(DegreeTuple((6, 6)), stop_after=3)
    assert run.applications == 3
    assert same(run.polytope.underlying(), wheel(6).underlying())


# ---------------------------------------------------------------------- S and Q


def test_s44():
    s = construct_S(4, 4)
    assert (s.num_vertices, s.num_edges) == (6, 10)
    assert is_self_dual(s)


def test_s75():
    s = construct_S(7, 5)
    assert degree_sequence(s) == DegreeSequence.parse("7,5,3^8")
    assert s.num_edges == 2 * (7 + 5 - 2) - 2
    assert s.degree(s.vertex("v1")) == 5 and s.degree(s.vertex("w1")) == 7
    assert is_self_dual(s)


@pytest.mark.parametrize("x", [3, 5, 8])
def test_s_with_a_triangle_is_a_pyramid(x):
    assert same(construct_S(x, 3).underlying(), wheel(x).underlying())


def test_s_rejects_bad_parameters():
    with pytest.raises(InvalidParameter):
        construct_S(4, 5)
    with pytest.raises(InvalidParameter):
        construct_Q(5, 3)


def test_q44_is_s44():
    assert same(construct_Q(4, 4).underlying(), construct_S(4, 4).underlying())


def test_q54_is_not_self_dual():
    q = construct_Q(5, 4)
    assert degree_sequence(q) == DegreeSequence.parse("5,4,3^5")
    assert is_polyhedral_map(q)
    assert not is_self_dual(q)
    face_sets = {frozenset(q.label(v) for v in q.face_walk(f)) for f in range(q.num_faces)}
    assert frozenset({"v1", "v2", "v3", "u"}) in face_sets
    assert frozenset({"v3", "u", "v4", "w1"}) in face_sets


# ---------------------------------------------------------------------- relabelled S(n, n) and P'


@pytest.mark.parametrize("n", [5, 6])
def test_seed_green(n):
    r = seed_green(n)
    pairs = green_incidences(n)
    assert r.map.num_edges == len(pairs) == 2 * (2 * (2 * n - 2) - 2)
    for i, j in pairs:
        assert r.map.find_dart(r.vertex(f"v{i}"), r.vertex(f"f{j}")) is not None
    assert check_phi(r)


def test_seed_green_needs_n_at_least_5():
    with pytest.raises(InvalidParameter):
        seed_green(4)


def test_p_prime():
    P = construct_P_prime(5, 3)
    assert degree_sequence(P) == DegreeSequence.parse("5^3,3^7")
    assert is_self_dual(P)
    assert degree_fingerprint(radial(P), "at-least-4").count("K2") >= 1
    r, Q = algorithm_one(DegreeTuple((5, 5, 5)))
    assert degree_fingerprint(r, "at-least-4").count("K2") == 0
    assert canonical_form(P.underlying()) != canonical_form(Q.underlying())


# ---------------------------------------------------------------------- Algorithm 2


def test_g6_is_s44_with_its_labelled_faces():
    g = labelled_g6()
    assert same(g.map.underlying(), construct_S(4, 4).underlying())
    assert g.face_name(frozenset({3, 4, 5})) == "f1"


def test_g7_g8_g9_match_drawings():
    assert same(construct_G(7).underlying(), graph(7, G7_EDGES))
    assert same(construct_G(8).underlying(), graph(8, G8_EDGES))
    assert same(construct_G(9).underlying(), graph(9, DRAWN_G_EDGES[9]))


def test_algorithm_two_step_grows_v_p():
    g = construct_G_labelled(7)
    nxt = algorithm_two_step(g)
    assert nxt.order == 8
    assert nxt.map.degree(6) == g.map.degree(6) + 1
    assert nxt.map.degree(7) == 3
    assert nxt.faces[0] == frozenset({5, 6, 7})


def test_algorithm_two_step_checks_its_input():
    g = labelled_g6()
    shuffled = LabeledPolyhedron(g.map, g.faces[1:] + g.faces[:1])
    with pytest.raises(PreconditionViolated):
        algorithm_two_step(shuffled)


@pytest.mark.parametrize("p", range(7, 13))
def test_g_p(p):
    G = construct_G(p)
    assert degree_sequence(G) == DegreeSequence.parse(f"4^{p - 4},3^4")
    assert is_self_dual(G)
    assert degree_fingerprint(G, "exactly-3").describe() == "P3 ∪ K1"
    _, P = algorithm_one(DegreeTuple((4,) * (p - 4)))
    assert degree_fingerprint(P, "exactly-3").describe() == "2K2"


def test_g_p_needs_p_at_least_6():
    with pytest.raises(InvalidParameter):
        construct_G(5)
