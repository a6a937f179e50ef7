"""
Algorithm 2: self-dual polyhedra with degree sequence 4^{p-4}, 3^4 that Algorithm 1 does not produce.

G_6 is S(4, 4) under a fixed labelling. Each step splits the edge v_{p-2} v_{p-1} towards v_p inside the
triangle f_1 = [v_{p-2}, v_{p-1}, v_p]. The new vertex v_{p+1} opens two triangles, labelled g_1 and g_2,
and every older face shifts up one index, so the triangle used by the next step is again the first face.
"""

from dataclasses import dataclass

from loguru import logger

from selfdual.constructions.direct import construct_S
from selfdual.errors import InvalidParameter, PreconditionViolated
from selfdual.planar_map.dart_map import PlanarMap
from selfdual.planar_map.surgery import edge_split


@dataclass(frozen=True)
class LabeledPolyhedron:
    """A map whose vertex id i carries label v_{i+1}, with faces[j] the vertex set of face f_{j+1}."""

    map: PlanarMap
    faces: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        actual = sorted(sorted(walk) for walk in (set(self.map.face_walk(f)) for f in range(self.map.num_faces)))
        if len(self.faces) != self.map.num_faces or actual != sorted(sorted(f) for f in self.faces):
            raise PreconditionViolated("face labels do not match the faces of the map")

    @property
    def order(self) -> int:
        return self.map.num_vertices

    def face_name(self, vertices: frozenset[int]) -> str:
        return f"f{self.faces.index(vertices) + 1}"


_G6_IDS = (4, 2, 1, 0, 3, 5)  # S(4, 4) id -> G_6 id
_G6_FACES = ((3, 4, 5), (2, 3, 4), (1, 2, 3), (0, 1, 2, 4), (0, 1, 3, 5), (0, 4, 5))


def labelled_g6() -> LabeledPolyhedron:
    m = construct_S(4, 4).renumbered(_G6_IDS).with_labels([f"v{i}" for i in range(1, 7)])
    return LabeledPolyhedron(m, tuple(frozenset(f) for f in _G6_FACES))


def algorithm_two_step(g: LabeledPolyhedron) -> LabeledPolyhedron:
    p = g.order
    a, b, c = p - 3, p - 2, p - 1
    if g.faces[0] != frozenset((a, b, c)) or g.map.find_dart(a, b) is None:
        logger.warning("f1 of the input is {}, not the triangle v{} v{} v{}", sorted(g.faces[0]), p - 2, p - 1, p)
        raise PreconditionViolated(f"f1 must be the triangle [v{p - 2}, v{p - 1}, v{p}]")
    m = edge_split(g.map, a, b, c, label=f"v{p + 1}")
    new = p
    faces = [frozenset((b, c, new)), frozenset((a, c, new))]
    faces.extend(f | {new} if a in f and b in f else f for f in g.faces[1:])
    return LabeledPolyhedron(m, tuple(faces))


def construct_G_labelled(p: int) -> LabeledPolyhedron:
    if p < 6:
        raise InvalidParameter(f"G_p needs p >= 6, got {p}")
    g = labelled_g6()
    for _ in range(p - 6):
        g = algorithm_two_step(g)
    logger.debug("built G_{} with {} edges", p, g.map.num_edges)
    return g


def construct_G(p: int) -> PlanarMap:
    return construct_G_labelled(p).map
