"""
Radial (vertex-face) graphs.

A radial graph is a bipartite quadrangulation whose vertices are the vertices (class v) and the faces (class f)
of a map. Each edge of the map corresponds to one quadrangle [v, f, w, g]. Every radial vertex carries its
class and a 1-based index, so v_i and f_i are addressable by name; a six-vertex cursor drives the
Z-transformation in `selfdual.constructions`.
"""

from collections import defaultdict
from dataclasses import dataclass
from enum import StrEnum
from itertools import combinations

import networkx as nx

from selfdual.errors import InvalidCursor, MissingLabels, NotQuadrangulation, NotTwoConnected
from selfdual.planar_map.dart_map import PlanarMap, build_map


class VertexClass(StrEnum):
    PRIMAL = "v"
    DUAL = "f"

    @property
    def other(self) -> "VertexClass":
        return VertexClass.DUAL if self is VertexClass.PRIMAL else VertexClass.PRIMAL


@dataclass(frozen=True)
class Cursor:
    """Six cursor roles: a, b, c primal; A, B, C dual; quadrangles [a,B,b,C] and [b,B,c,A] share edge bB."""

    a: int
    A: int
    b: int
    B: int
    c: int
    C: int

    def roles(self) -> dict[str, int]:
        return {"a": self.a, "A": self.A, "b": self.b, "B": self.B, "c": self.c, "C": self.C}


@dataclass(frozen=True)
class LabeledRadial:
    map: PlanarMap
    classes: tuple[VertexClass, ...]
    indices: tuple[int, ...]
    cursor: Cursor | None = None
    last_inserted: tuple[int, int] | None = None  # (d, D) created by the latest Z-transformation

    def __post_init__(self) -> None:
        n = self.map.num_vertices
        if len(self.classes) != n or len(self.indices) != n:
            raise MissingLabels("every radial vertex needs a class and an index")
        for cls in VertexClass:
            found = sorted(i for i, k in zip(self.indices, self.classes) if k is cls)
            if found != list(range(1, len(found) + 1)):
                raise MissingLabels(f"indices of class {cls.value} are not 1..{len(found)}")

    # ------------------------------------------------------------------ naming

    def name(self, v: int) -> str:
        return f"{self.classes[v].value}{self.indices[v]}"

    def names(self) -> tuple[str, ...]:
        return tuple(self.name(v) for v in range(self.map.num_vertices))

    def vertex(self, name: str) -> int:
        cls, index = VertexClass(name[0]), int(name[1:])
        for v, (k, i) in enumerate(zip(self.classes, self.indices)):
            if k is cls and i == index:
                return v
        raise KeyError(name)

    def class_size(self, cls: VertexClass) -> int:
        return sum(1 for k in self.classes if k is cls)

    def members(self, cls: VertexClass) -> list[int]:
        """Vertices of a class ordered by index."""
        return sorted((v for v in range(self.map.num_vertices) if self.classes[v] is cls), key=self.indices.__getitem__)

    def with_cursor(self, cursor: Cursor | None) -> "LabeledRadial":
        return LabeledRadial(self.map, self.classes, self.indices, cursor, None)

    def describe_cursor(self) -> str:
        if self.cursor is None:
            return "no cursor"
        return ", ".join(f"{role}={self.name(v)}" for role, v in self.cursor.roles().items())

    # ------------------------------------------------------------------ checks

    def is_bipartite(self) -> bool:
        m = self.map
        return all(self.classes[m.tails[d]] is not self.classes[m.tails[d ^ 1]] for d in range(m.num_darts))

    def is_quadrangulation(self) -> bool:
        return all(len(orbit) == 4 for orbit in self.map.face_orbits)

    def validate(self, full: bool = True) -> None:
        if not self.is_bipartite():
            raise NotQuadrangulation("radial graph is not bipartite between its classes")
        if not self.is_quadrangulation():
            raise NotQuadrangulation("radial graph has a face that is not a quadrangle")
        # between a Z-transformation and its relabel the old cursor no longer spans the chord
        if self.cursor is not None and self.last_inserted is None:
            check_cursor(self)
        if full and not every_four_cycle_bounds_face(self):
            raise NotQuadrangulation("radial graph has a separating 4-cycle")


def check_cursor(r: LabeledRadial) -> None:
    """Raise InvalidCursor unless the cursor sits on two adjacent quadrangles [a,B,b,C] and [b,B,c,A]."""
    if r.cursor is None:
        raise InvalidCursor("radial has no cursor")
    cur = r.cursor
    roles = cur.roles()
    if len(set(roles.values())) != 6:
        raise InvalidCursor(f"cursor roles are not six distinct vertices: {r.describe_cursor()}")
    for role, v in roles.items():
        expected = VertexClass.PRIMAL if role.islower() else VertexClass.DUAL
        if r.classes[v] is not expected:
            raise InvalidCursor(f"cursor role {role} sits on {r.name(v)}")
    e = r.map.find_dart(cur.b, cur.B)
    if e is None:
        raise InvalidCursor(f"cursor chord {r.name(cur.b)}-{r.name(cur.B)} is not an edge")
    sides = {frozenset(r.map.face_walk(r.map.face_of[e])), frozenset(r.map.face_walk(r.map.face_of[e ^ 1]))}
    expected_sides = {frozenset((cur.a, cur.B, cur.b, cur.C)), frozenset((cur.b, cur.B, cur.c, cur.A))}
    if sides != expected_sides:
        raise InvalidCursor(f"quadrangles around the cursor chord do not match the cursor: {r.describe_cursor()}")


def radial(m: PlanarMap) -> LabeledRadial:
    """Vertex ids: map vertex v keeps id v, face j becomes V + j; indices are 1-based in the same order."""
    if m.num_vertices < 3 or any(m.tails[d] == m.tails[d ^ 1] for d in range(m.num_darts)):
        raise NotTwoConnected("map has a loop or too few vertices")
    if not nx.is_biconnected(m.underlying().to_networkx()):
        raise NotTwoConnected("map is not 2-connected")
    n_vertices = m.num_vertices
    rotation_system: dict[int, list[int]] = {}
    for v in range(n_vertices):
        rotation_system[v] = [n_vertices + m.face_of[x] for x in m.darts_at(v)]
    # face walks run clockwise around their face, so the rotation at a face vertex is the reversed walk
    for f, orbit in enumerate(m.face_orbits):
        rotation_system[n_vertices + f] = [m.tails[d] for d in reversed(orbit)]
    r_map = build_map(rotation_system)
    classes = (VertexClass.PRIMAL,) * n_vertices + (VertexClass.DUAL,) * m.num_faces
    indices = tuple(range(1, n_vertices + 1)) + tuple(range(1, m.num_faces + 1))
    return LabeledRadial(r_map, classes, indices)


def primal_from_radial(r: LabeledRadial, cls: VertexClass | str = VertexClass.PRIMAL) -> PlanarMap:
    """Map on the vertices of one class, joined when they are opposite corners of a quadrangle.

    Vertex v_i (or f_i) of the radial becomes vertex i - 1 labelled "v{i}" (or "f{i}"). Every radial dart x
    leaving the class becomes one dart of the result; its twin sits at the opposite corner of the quadrangle
    between x and the next dart in rotation.
    """
    cls = VertexClass(cls)
    m = r.map
    for orbit in m.face_orbits:
        if len(orbit) != 4:
            raise NotQuadrangulation(f"radial face of length {len(orbit)}")
    rot, tails, classes = m.rotation, m.tails, r.classes
    new_id = [i - 1 if k is cls else -1 for k, i in zip(classes, r.indices, strict=True)]
    dart_id = [-1] * len(tails)
    n_darts = 0
    for x in range(len(tails)):
        if dart_id[x] >= 0 or new_id[tails[x]] < 0:
            continue
        y = rot[rot[x] ^ 1] ^ 1
        if new_id[tails[y]] < 0:
            raise NotQuadrangulation("radial graph is not bipartite between its classes")
        dart_id[x], dart_id[y] = n_darts, n_darts + 1
        n_darts += 2
    new_tails = [0] * n_darts
    rotation = [0] * n_darts
    for x, i in enumerate(dart_id):
        if i >= 0:
            new_tails[i] = new_id[tails[x]]
            rotation[i] = dart_id[rot[x]]
    labels = tuple(f"{cls.value}{i + 1}" for i in range(r.class_size(cls)))
    return PlanarMap(tuple(new_tails), tuple(rotation), labels)


def every_four_cycle_bounds_face(r: LabeledRadial) -> bool:
    """True iff every 4-cycle of the radial graph is the boundary of a face.

    Each 4-cycle u-x-w-y has two opposite corners u, w in the same class; pairs sharing at least two common
    neighbours are found by walking two steps from every vertex.
    """
    m = r.map
    face_sets = {frozenset(m.tails[d] for d in orbit) for orbit in m.face_orbits}
    neighbours = [set(m.neighbours(v)) for v in range(m.num_vertices)]
    for u in range(m.num_vertices):
        common: dict[int, list[int]] = defaultdict(list)
        for x in neighbours[u]:
            for w in neighbours[x]:
                if w > u:
                    common[w].append(x)
        for w, shared in common.items():
            for x, y in combinations(shared, 2):
                if frozenset((u, x, w, y)) not in face_sets:
                    return False
    return True
