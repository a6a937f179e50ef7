"""Isomorphism invariants built from the connected components of a graph."""

from collections import Counter
from dataclasses import dataclass

import networkx as nx

from selfdual.planar_map.abstract import AbstractGraph, DegreeMode, induced_by_degree
from selfdual.planar_map.dart_map import PlanarMap
from selfdual.planar_map.radial import LabeledRadial
from selfdual.verify.canonical import canonical_form


@dataclass(frozen=True, order=True)
class ComponentDescriptor:
    order: int
    size: int
    degrees: tuple[int, ...]
    end_vertices: int
    canonical: bytes

    def name(self) -> str:
        n = self.order
        if n == 1:
            return "K1"
        if self.size == n * (n - 1) // 2:
            return f"K{n}"
        if self.size == n - 1 and self.end_vertices == 2 and max(self.degrees) <= 2:
            return f"P{n}"
        if self.size == n and set(self.degrees) == {2}:
            return f"C{n}"
        return f"G{n},{self.size}"


@dataclass(frozen=True)
class Fingerprint:
    components: tuple[ComponentDescriptor, ...]

    @property
    def end_vertices(self) -> int:
        return sum(c.end_vertices for c in self.components)

    def count(self, name: str) -> int:
        return sum(1 for c in self.components if c.name() == name)

    def describe(self) -> str:
        if not self.components:
            return "empty"
        names = Counter(c.name() for c in self.components)
        return " ∪ ".join(name if k == 1 else f"{k}{name}" for name, k in names.items())

    def __str__(self) -> str:
        return self.describe()


def component_fingerprint(g: AbstractGraph) -> Fingerprint:
    graph = g.to_networkx()
    parts = []
    for nodes in nx.connected_components(graph):
        comp = g.induced(nodes)
        degrees = tuple(sorted(comp.degrees(), reverse=True))
        parts.append(ComponentDescriptor(comp.order, comp.size, degrees, degrees.count(1), canonical_form(comp)))
    # largest components first, ties broken by the remaining fields
    parts.sort(key=lambda c: (-c.order, -c.size, c.degrees, c.end_vertices, c.canonical))
    return Fingerprint(tuple(parts))


def degree_fingerprint(target: PlanarMap | LabeledRadial | AbstractGraph, mode: DegreeMode | str) -> Fingerprint:
    """Fingerprint of H3 (exactly-3) or H+ (at-least-4) of a map, a radial graph or a plain graph."""
    if isinstance(target, LabeledRadial):
        target = target.map
    if isinstance(target, PlanarMap):
        target = target.underlying()
    return component_fingerprint(induced_by_degree(target, mode))


def degree_profile(
    target: PlanarMap | LabeledRadial | AbstractGraph, mode: DegreeMode | str
) -> tuple[tuple[int, int], ...]:
    """Sorted pairs (degree in the graph, degree in H3 or H+) over the vertices of H3 or H+.

    Two graphs whose H+ have the same shape but whose end-vertices carry different degrees get different profiles.
    """
    if isinstance(target, LabeledRadial):
        target = target.map
    if isinstance(target, PlanarMap):
        target = target.underlying()
    h = induced_by_degree(target, mode)
    high = DegreeMode(mode) is DegreeMode.AT_LEAST_4
    keep = [v for v in range(target.order) if (target.degree(v) >= 4 if high else target.degree(v) == 3)]
    return tuple(sorted((target.degree(v), h.degree(i)) for i, v in enumerate(keep)))
