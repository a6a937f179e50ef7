from loguru import logger

from selfdual.errors import InvalidParameter
from selfdual.planar_map.dart_map import PlanarMap, build_map_from_faces
from selfdual.planar_map.surgery import edge_split


def s_labels(x: int, y: int) -> list[str]:
    return [f"v{i}" for i in range(1, x + 1)] + [f"w{j}" for j in range(1, y - 1)]


def construct_S(x: int, y: int) -> PlanarMap:
    """The self-dual polyhedron S(x, y) with an x-gon and a y-gon sharing the edge v_{x-1} v_x.

    Vertices v1..vx get ids 0..x-1 and w1..w_{y-2} get ids x..x+y-3; deg(v1) = y and deg(w1) = x.
    For y = 3 this is the x-gonal pyramid with apex w1.
    """
    if y < 3 or x < y:
        raise InvalidParameter(f"S(x, y) needs x >= y >= 3, got x={x}, y={y}")

    def v(i: int) -> int:
        return i - 1

    def w(j: int) -> int:
        return x + j - 1

    faces = [
        [v(i) for i in range(1, x + 1)],
        [w(j) for j in range(1, y - 1)] + [v(x), v(x - 1)],
        [v(1), v(x), w(y - 2)],
        [w(1), v(x - 1), v(x - 2)],
    ]
    faces.extend([v(1), w(j + 1), w(j)] for j in range(1, y - 2))
    faces.extend([w(1), v(j + 1), v(j)] for j in range(1, x - 2))
    result = build_map_from_faces(faces, s_labels(x, y))
    logger.debug("built S({}, {}) with {}", x, y, result)
    return result


def construct_Q(x: int, y: int) -> PlanarMap:
    """S(x, y-1) - v3v4 + u + uv1 + uv3 + uv4: same degrees as S(x, y), self-dual only when x = 4."""
    if y < 4 or x < y:
        raise InvalidParameter(f"Q(x, y) needs x >= y >= 4, got x={x}, y={y}")
    base = construct_S(x, y - 1)
    return edge_split(base, base.vertex("v3"), base.vertex("v4"), base.vertex("v1"), label="u")
