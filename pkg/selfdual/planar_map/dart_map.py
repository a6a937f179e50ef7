"""
Embedded planar graphs as rotation systems on darts.

Dart d and its twin d ^ 1 form one edge. `rotation[d]` is the next dart counter-clockwise around the tail of d,
and the face permutation is phi(d) = rotation[d ^ 1]. Every map is checked against Euler's relation when built.
"""

from collections import Counter, defaultdict
from collections.abc import Hashable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from loguru import logger

from selfdual.errors import InconsistentRotation, NonPlanarEmbedding
from selfdual.planar_map.abstract import AbstractGraph, DegreeSequence, is_three_connected


def _least_rotation(cyclic: list[int]) -> tuple[int, ...]:
    return min(tuple(cyclic[i:] + cyclic[:i]) for i in range(len(cyclic)))


@dataclass(frozen=True, eq=False)
class PlanarMap:
    tails: tuple[int, ...]
    rotation: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None)

    def __post_init__(self) -> None:
        tails, rotation = self.tails, self.rotation
        n_darts = len(tails)
        if n_darts % 2 or len(rotation) != n_darts:
            raise InconsistentRotation("darts must come in twin pairs with one rotation entry each")
        if sorted(rotation) != list(range(n_darts)):
            raise InconsistentRotation("rotation is not a permutation of the darts")
        if tuple(map(tails.__getitem__, rotation)) != tuple(tails):
            raise InconsistentRotation("rotation moves a dart to another vertex")
        if n_darts and set(tails) != set(range(max(tails) + 1)):
            raise InconsistentRotation("vertex identifiers must be contiguous")
        if self.labels is not None and len(self.labels) != self.num_vertices:
            raise InconsistentRotation("one label per vertex is required")
        # vertex orbits of the rotation must be single cycles
        seen = [False] * n_darts
        cycles = 0
        for d in range(n_darts):
            if not seen[d]:
                cycles += 1
                x = d
                while not seen[x]:
                    seen[x] = True
                    x = rotation[x]
        if cycles != self.num_vertices:
            raise InconsistentRotation("a vertex carries more than one rotation cycle")
        euler = self.num_vertices - self.num_edges + self.num_faces
        if euler != 2:
            raise NonPlanarEmbedding(
                f"V - E + F = {self.num_vertices} - {self.num_edges} + {self.num_faces} = {euler}, expected 2"
            )

    # ------------------------------------------------------------------ counts

    @property
    def num_darts(self) -> int:
        return len(self.tails)

    @cached_property
    def num_vertices(self) -> int:
        return max(self.tails) + 1 if self.tails else 0

    @property
    def num_edges(self) -> int:
        return len(self.tails) // 2

    @property
    def num_faces(self) -> int:
        return len(self.face_orbits)

    # ------------------------------------------------------------------ darts

    def head(self, d: int) -> int:
        return self.tails[d ^ 1]

    def phi(self, d: int) -> int:
        return self.rotation[d ^ 1]

    @cached_property
    def anchors(self) -> tuple[int, ...]:
        """Smallest dart leaving each vertex."""
        first = [-1] * self.num_vertices
        for d in range(self.num_darts - 1, -1, -1):
            first[self.tails[d]] = d
        return tuple(first)

    def darts_at(self, v: int) -> list[int]:
        start = self.anchors[v]
        out = [start]
        d = self.rotation[start]
        while d != start:
            out.append(d)
            d = self.rotation[d]
        return out

    def neighbours(self, v: int) -> list[int]:
        """Cyclic counter-clockwise neighbour list of v (repeats for parallel edges)."""
        return [self.head(d) for d in self.darts_at(v)]

    def find_dart(self, u: int, v: int) -> int | None:
        for d in self.darts_at(u):
            if self.head(d) == v:
                return d
        return None

    def degree(self, v: int) -> int:
        return len(self.darts_at(v))

    # ------------------------------------------------------------------ faces

    @cached_property
    def face_orbits(self) -> tuple[tuple[int, ...], ...]:
        rotation = self.rotation
        seen = [False] * self.num_darts
        orbits = []
        for d in range(self.num_darts):
            if seen[d]:
                continue
            orbit = []
            x = d
            while not seen[x]:
                seen[x] = True
                orbit.append(x)
                x = rotation[x ^ 1]
            orbits.append(tuple(orbit))
        return tuple(orbits)

    @cached_property
    def face_of(self) -> tuple[int, ...]:
        owner = [0] * self.num_darts
        for f, orbit in enumerate(self.face_orbits):
            for d in orbit:
                owner[d] = f
        return tuple(owner)

    def face_walk(self, f: int) -> tuple[int, ...]:
        return tuple(self.tails[d] for d in self.face_orbits[f])

    # ------------------------------------------------------------------ structure

    @cached_property
    def is_simple(self) -> bool:
        pairs = set()
        for d in range(0, self.num_darts, 2):
            u, v = self.tails[d], self.tails[d ^ 1]
            if u == v:
                return False
            key = (min(u, v), max(u, v))
            if key in pairs:
                return False
            pairs.add(key)
        return True

    def underlying(self) -> AbstractGraph:
        """Underlying simple graph; loops and parallel edges collapse."""
        edges = {
            (min(self.tails[d], self.tails[d ^ 1]), max(self.tails[d], self.tails[d ^ 1]))
            for d in range(0, self.num_darts, 2)
            if self.tails[d] != self.tails[d ^ 1]
        }
        return AbstractGraph.from_edges(self.num_vertices, edges, self.labels)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def vertex(self, label: str) -> int:
        """Vertex id carrying `label`."""
        if self.labels is None:
            return int(label)
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(label) from None

    def with_labels(self, labels: Sequence[str] | None) -> "PlanarMap":
        return PlanarMap(self.tails, self.rotation, tuple(labels) if labels is not None else None)

    def renumbered(self, new_id: Sequence[int]) -> "PlanarMap":
        """Same embedding with vertex v renamed new_id[v]; labels move with their vertices."""
        labels = None
        if self.labels is not None:
            moved = [""] * self.num_vertices
            for v, name in enumerate(self.labels):
                moved[new_id[v]] = name
            labels = tuple(moved)
        return PlanarMap(tuple(new_id[t] for t in self.tails), self.rotation, labels)

    def rotation_lists(self) -> dict[int, list[int]]:
        return {v: self.neighbours(v) for v in range(self.num_vertices)}

    def signature(self) -> tuple:
        """Hashable value identifying the embedded, labelled map up to dart renumbering."""
        return (tuple(_least_rotation(self.neighbours(v)) for v in range(self.num_vertices)), self.labels)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PlanarMap) and self.signature() == other.signature()

    def __hash__(self) -> int:
        return hash(self.signature())

    def __repr__(self) -> str:
        return f"PlanarMap(V={self.num_vertices}, E={self.num_edges}, F={self.num_faces})"


def build_map(rotation_system: Mapping[Hashable, Sequence[Hashable]], labels: Sequence[str] | None = None) -> PlanarMap:
    """Build a map from per-vertex counter-clockwise neighbour lists.

    Vertex ids follow the iteration order of `rotation_system`. Keys that are not exactly 0..n-1 become labels
    (as strings) unless `labels` is given. Parallel edges are paired in opposite cyclic order at their two ends,
    as they are in any plane embedding.
    """
    keys = list(rotation_system)
    index = {key: i for i, key in enumerate(keys)}
    if labels is None and keys != list(range(len(keys))):
        labels = [str(key) for key in keys]

    for u, nbrs in rotation_system.items():
        for v in nbrs:
            if v not in index:
                raise InconsistentRotation(f"neighbour {v!r} of {u!r} is not a vertex")

    # positions[(u, v)] lists the slots in u's list that point to v
    positions: dict[tuple[int, int], list[int]] = defaultdict(list)
    for u, nbrs in rotation_system.items():
        for slot, v in enumerate(nbrs):
            positions[(index[u], index[v])].append(slot)

    dart_at: dict[tuple[int, int], int] = {}
    tails: list[int] = []
    for (u, v), slots in positions.items():
        if u == v:
            if len(slots) % 2:
                raise InconsistentRotation(f"vertex {keys[u]!r} lists itself an odd number of times")
            for i in range(0, len(slots), 2):
                for slot in slots[i : i + 2]:
                    dart_at[(u, slot)] = len(tails)
                    tails.append(u)
            continue
        back = positions.get((v, u), [])
        if len(back) != len(slots):
            raise InconsistentRotation(f"{keys[u]!r} and {keys[v]!r} list each other unequally often")
        if u > v:
            continue
        for slot, back_slot in zip(slots, reversed(back)):
            dart_at[(u, slot)] = len(tails)
            tails.append(u)
            dart_at[(v, back_slot)] = len(tails)
            tails.append(v)

    rotation = [0] * len(tails)
    for u, nbrs in rotation_system.items():
        ui = index[u]
        k = len(nbrs)
        for slot in range(k):
            rotation[dart_at[(ui, slot)]] = dart_at[(ui, (slot + 1) % k)]

    if any(not rotation_system[key] for key in keys):
        raise InconsistentRotation("isolated vertices cannot be embedded")
    return PlanarMap(tuple(tails), tuple(rotation), tuple(labels) if labels is not None else None)


def build_map_from_faces(faces_: Sequence[Sequence[int]], labels: Sequence[str] | None = None) -> PlanarMap:
    """Build a simple map from face boundaries listed with one common orientation.

    Every directed edge u->v must occur in exactly one face. Along a face (u, v, w), w follows u in the
    rotation at v.
    """
    successor: dict[int, dict[int, int]] = defaultdict(dict)
    used: set[tuple[int, int]] = set()
    for face in faces_:
        k = len(face)
        for i in range(k):
            u, v, w = face[i - 1], face[i], face[(i + 1) % k]
            if (v, w) in used:
                raise InconsistentRotation(f"directed edge {v}->{w} lies on two faces")
            used.add((v, w))
            successor[v][u] = w
    for u, v in used:
        if (v, u) not in used:
            raise InconsistentRotation(f"edge {u}-{v} has a face on one side only")

    rotation_system: dict[int, list[int]] = {}
    for v in range(len(successor)):
        if v not in successor:
            raise InconsistentRotation(f"vertex {v} lies on no face")
        start = next(iter(successor[v]))
        order = [start]
        nxt = successor[v][start]
        while nxt != start:
            order.append(nxt)
            nxt = successor[v][nxt]
        if len(order) != len(successor[v]):
            raise InconsistentRotation(f"faces around vertex {v} do not close up into one disc")
        rotation_system[v] = order
    return build_map(rotation_system, labels)


def faces(m: PlanarMap) -> list[tuple[int, ...]]:
    return [m.face_walk(f) for f in range(m.num_faces)]


def degree_sequence(m: PlanarMap) -> DegreeSequence:
    return DegreeSequence.from_degrees(Counter(m.tails).values())


def dual(m: PlanarMap) -> PlanarMap:
    """Vertices become faces: new rotation is the face permutation, tails are face indices."""
    rotation = tuple(m.rotation[d ^ 1] for d in range(m.num_darts))
    result = PlanarMap(m.face_of, rotation)
    if not result.is_simple:
        logger.debug("dual of {} has loops or parallel edges", m)
    return result


def is_polyhedral_map(m: PlanarMap) -> bool:
    return m.is_simple and is_three_connected(m.underlying())
