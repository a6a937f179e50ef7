"""Standard small polyhedra (and the n-cycle) built from consistently oriented face lists."""

from selfdual.errors import InvalidParameter
from selfdual.planar_map.dart_map import PlanarMap, build_map_from_faces


def _require(n: int, least: int, what: str) -> None:
    if n < least:
        raise InvalidParameter(f"{what} needs n >= {least}, got {n}")


def cycle_map(n: int) -> PlanarMap:
    _require(n, 3, "cycle")
    ring = list(range(n))
    return build_map_from_faces([ring, ring[::-1]])


def wheel(n: int) -> PlanarMap:
    """n-gonal pyramid: rim 0..n-1, hub n."""
    _require(n, 3, "wheel")
    hub = n
    rim = list(range(n))
    spokes = [[hub, (i + 1) % n, i] for i in range(n)]
    return build_map_from_faces([rim, *spokes])


def tetrahedron() -> PlanarMap:
    return wheel(3)


def prism(n: int) -> PlanarMap:
    """Top ring 0..n-1, bottom ring n..2n-1 with i joined to n + i."""
    _require(n, 3, "prism")
    top = list(range(n))
    bottom = [n + i for i in range(n)]
    sides = [[(i + 1) % n, i, n + i, n + (i + 1) % n] for i in range(n)]
    return build_map_from_faces([top, bottom[::-1], *sides])


def cube() -> PlanarMap:
    return prism(4)


def bipyramid(n: int) -> PlanarMap:
    """Ring 0..n-1 with apexes n (north) and n + 1 (south)."""
    _require(n, 3, "bipyramid")
    north, south = n, n + 1
    upper = [[north, i, (i + 1) % n] for i in range(n)]
    lower = [[south, (i + 1) % n, i] for i in range(n)]
    return build_map_from_faces([*upper, *lower])


def octahedron() -> PlanarMap:
    return bipyramid(4)
