from conftest import same

from selfdual.constructions import construct_S
from selfdual.planar_map.io import (
    MapDocument,
    from_graph6,
    map_from_json,
    map_from_text,
    map_to_json,
    map_to_text,
    to_dot,
    to_graph6,
)


def test_text_round_trip(cube_map):
    back = map_from_text(map_to_text(cube_map))
    assert back.num_faces == cube_map.num_faces
    assert same(back.underlying(), cube_map.underlying())


def test_text_keeps_labels():
    s = construct_S(5, 4)
    text = map_to_text(s)
    assert text.splitlines()[0].startswith("v1:")
    assert map_from_text(text).labels == s.labels


def test_json_round_trip():
    s = construct_S(7, 5)
    doc = MapDocument.model_validate_json(map_to_json(s, "S(7,5)"))
    assert doc.name == "S(7,5)"
    assert len(doc.vertices) == 10
    back = map_from_json(map_to_json(s))
    assert sorted(len(f) for f in back.face_orbits) == sorted(len(f) for f in s.face_orbits)


def test_graph6_round_trip(cube_map):
    g = cube_map.underlying()
    assert from_graph6(to_graph6(g)).edges() == g.edges()


def test_dot_lists_every_edge(tetra):
    dot = to_dot(tetra.underlying(), "K4")
    assert dot.startswith('graph "K4" {')
    assert dot.count(" -- ") == 6
