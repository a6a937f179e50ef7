"""Unembedded simple graphs and degree sequences."""

from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import StrEnum

import networkx as nx


class DegreeMode(StrEnum):
    EXACTLY_3 = "exactly-3"
    AT_LEAST_4 = "at-least-4"


@dataclass(frozen=True)
class AbstractGraph:
    """Simple graph on vertices 0..n-1 stored as symmetric adjacency sets."""

    adjacency: tuple[frozenset[int], ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        n = len(self.adjacency)
        for v, nbrs in enumerate(self.adjacency):
            if v in nbrs:
                raise ValueError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < n or v not in self.adjacency[u]:
                    raise ValueError(f"adjacency of {v} and {u} is not symmetric")
        if self.labels is not None and len(self.labels) != n:
            raise ValueError("one label per vertex is required")

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None) -> "AbstractGraph":
        adj: list[set[int]] = [set() for _ in range(order)]
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        return cls(tuple(frozenset(s) for s in adj), tuple(labels) if labels is not None else None)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "AbstractGraph":
        nodes = sorted(graph.nodes)
        index = {v: i for i, v in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in graph.edges), [str(v) for v in nodes])

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.order))
        graph.add_edges_from(self.edges())
        return graph

    @property
    def order(self) -> int:
        return len(self.adjacency)

    @property
    def size(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in sorted(nbrs) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def index_of(self, label: str) -> int:
        if self.labels is None:
            return int(label)
        return self.labels.index(label)

    def induced(self, vertices: Iterable[int]) -> "AbstractGraph":
        """Vertex-induced subgraph renumbered 0..k-1 in increasing order; labels follow the vertices."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        adj = tuple(frozenset(index[u] for u in self.adjacency[v] if u in index) for v in keep)
        return AbstractGraph(adj, tuple(self.label(v) for v in keep))

    def relabelled(self, permutation: Sequence[int]) -> "AbstractGraph":
        """Graph with vertex v renamed permutation[v]."""
        n = self.order
        adj: list[frozenset[int]] = [frozenset()] * n
        for v, nbrs in enumerate(self.adjacency):
            adj[permutation[v]] = frozenset(permutation[u] for u in nbrs)
        return AbstractGraph(tuple(adj))

    def degree_sequence(self) -> "DegreeSequence":
        return DegreeSequence.from_degrees(self.degrees())


@dataclass(frozen=True)
class DegreeSequence:
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(a < b for a, b in zip(self.values, self.values[1:])):
            raise ValueError("degree sequence must be non-increasing")
        if any(d < 0 for d in self.values):
            raise ValueError("degrees must be non-negative")

    @classmethod
    def from_degrees(cls, degrees: Iterable[int]) -> "DegreeSequence":
        return cls(tuple(sorted(degrees, reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "DegreeSequence":
        """Accepts comma separated entries, each either `d` or `d^k`."""
        degrees: list[int] = []
        for item in text.replace(" ", "").split(","):
            if not item:
                continue
            value, _, repeat = item.partition("^")
            degrees.extend([int(value)] * (int(repeat) if repeat else 1))
        return cls.from_degrees(degrees)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    @property
    def total(self) -> int:
        return sum(self.values)

    def counts(self) -> dict[int, int]:
        return dict(sorted(Counter(self.values).items(), reverse=True))

    def notation(self) -> str:
        return ",".join(str(d) if k == 1 else f"{d}^{k}" for d, k in self.counts().items())

    def __str__(self) -> str:
        return self.notation()

    def is_even(self) -> bool:
        return self.total % 2 == 0

    def is_graphic(self) -> bool:
        return not self.values or nx.is_graphical(list(self.values), method="eg")

    def could_be_polyhedral(self) -> bool:
        return self.is_even() and len(self.values) >= 4 and (not self.values or self.values[-1] >= 3)


def is_three_connected(g: AbstractGraph) -> bool:
    """At least 4 vertices and no separating set of size <= 2.

    Removes each vertex in turn and asks networkx whether the rest is biconnected, which is
    O(V * (V + E)) and comfortably fast at the orders verified here.
    """
    if g.order < 4:
        return False
    graph = g.to_networkx()
    if not nx.is_connected(graph):
        return False
    for v in range(g.order):
        rest = graph.copy()
        rest.remove_node(v)
        if not nx.is_biconnected(rest):
            return False
    return True


def induced_by_degree(g: AbstractGraph, mode: DegreeMode | str) -> AbstractGraph:
    """H3 (degree exactly 3) or H+ (degree at least 4); degrees are taken in g, not in the result."""
    mode = DegreeMode(mode)
    if mode is DegreeMode.EXACTLY_3:
        keep = [v for v in range(g.order) if g.degree(v) == 3]
    else:
        keep = [v for v in range(g.order) if g.degree(v) >= 4]
    return g.induced(keep)
