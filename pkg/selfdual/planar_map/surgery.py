from loguru import logger

from selfdual.errors import NotAnEdge, VertexNotOnFace
from selfdual.planar_map.builder import MapBuilder
from selfdual.planar_map.dart_map import PlanarMap


def split_edge_in_place(builder: MapBuilder, a: int, b: int, c: int, label: str | None = None) -> int:
    """Replace edge ab by a new vertex d joined to a, b and c, drawn inside a face through ab and c.

    When both faces of ab contain c, the face on the left of a->b (the face of that dart) is used.
    Returns d.
    """
    if c in (a, b):
        raise VertexNotOnFace(f"third vertex {c} must differ from the split edge {a}-{b}")
    e = builder.find_dart(a, b)
    if e is None:
        raise NotAnEdge(f"{a}-{b} is not an edge")
    if c not in builder.face_vertices(e):
        e ^= 1
        if c not in builder.face_vertices(e):
            raise VertexNotOnFace(f"vertex {c} is not on a face through edge {a}-{b}")
    c_corner = builder.corner(e, c)
    d = builder.subdivide(e, label)
    # e now runs into d, and e ^ 1 leaves d on the same face
    builder.add_edge(e ^ 1, c_corner)
    return d


def edge_split(m: PlanarMap, a: int, b: int, c: int, label: str | None = None) -> PlanarMap:
    """Gamma - ab + d + da + db + dc with d the next free vertex id."""
    builder = MapBuilder(m)
    d = split_edge_in_place(builder, a, b, c, label)
    result = builder.freeze()
    logger.debug("edge split {}-{} towards {} created vertex {}", m.label(a), m.label(b), m.label(c), result.label(d))
    return result
