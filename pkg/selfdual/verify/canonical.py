"""
Canonical labelling by colour refinement and individualisation.

Colours are ranks of (own colour, sorted neighbour colours) and therefore do not depend on vertex names. Every
discrete partition reached by individualising vertices of the first smallest non-singleton cell is a candidate
ordering; the canonical one has the least adjacency certificate. Automorphisms found between equal leaves prune
siblings in the same orbit of the current path's pointwise stabiliser.
"""

from collections.abc import Sequence
from dataclasses import dataclass, field

import networkx as nx

from selfdual.planar_map.abstract import AbstractGraph

Certificate = tuple[int, ...]


def refine(adjacency: Sequence[frozenset[int]], colours: Sequence[int]) -> list[int]:
    current = list(colours)
    n_classes = len(set(current))
    while True:
        keys = [(current[v], tuple(sorted(current[u] for u in nbrs))) for v, nbrs in enumerate(adjacency)]
        rank = {key: i for i, key in enumerate(sorted(set(keys)))}
        current = [rank[key] for key in keys]
        if len(rank) == n_classes:
            return current
        n_classes = len(rank)


def _target_cell(colours: list[int]) -> list[int]:
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colours):
        cells.setdefault(c, []).append(v)
    non_singleton = [(len(members), c) for c, members in cells.items() if len(members) > 1]
    _, c = min(non_singleton)
    return cells[c]


def _individualise(colours: list[int], v: int) -> list[int]:
    out = [2 * c + 1 for c in colours]
    out[v] -= 1
    return out


def _certificate(adjacency: Sequence[frozenset[int]], position: list[int]) -> Certificate:
    cert = [0] * len(position)
    for v, nbrs in enumerate(adjacency):
        cert[position[v]] = sum(1 << position[u] for u in nbrs)
    return tuple(cert)


@dataclass
class _Search:
    adjacency: Sequence[frozenset[int]]
    best: tuple[Certificate, list[int]] | None = None
    first: tuple[Certificate, list[int]] | None = None
    automorphisms: list[list[int]] = field(default_factory=list)

    def _record(self, position: list[int]) -> None:
        cert = _certificate(self.adjacency, position)
        for seen in (self.first, self.best):
            if seen is not None and seen[0] == cert:
                # vertex at position i of this leaf maps to the vertex at position i of the earlier leaf
                inverse = [0] * len(position)
                for v, pos in enumerate(seen[1]):
                    inverse[pos] = v
                self.automorphisms.append([inverse[position[v]] for v in range(len(position))])
                break
        if self.first is None:
            self.first = (cert, position)
        if self.best is None or cert < self.best[0]:
            self.best = (cert, position)

    def _orbit_roots(self, path: list[int]) -> list[int]:
        """Orbit representative of every vertex under the automorphisms found so far that fix `path`."""
        parent = list(range(len(self.adjacency)))

        def find(v: int) -> int:
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for gamma in self.automorphisms:
            if all(gamma[p] == p for p in path):
                for v, w in enumerate(gamma):
                    parent[find(v)] = find(w)
        return [find(v) for v in range(len(parent))]

    def search(self, colours: list[int], path: list[int]) -> None:
        if len(set(colours)) == len(colours):
            self._record(colours)
            return
        cell = _target_cell(colours)
        explored: list[int] = []
        for v in cell:
            # orbits grow as automorphisms are found in earlier siblings
            roots = self._orbit_roots(path)
            if any(roots[v] == roots[u] for u in explored):
                continue
            explored.append(v)
            self.search(refine(self.adjacency, _individualise(colours, v)), path + [v])


def canonical_order(g: AbstractGraph) -> tuple[list[int], Certificate]:
    """position[v] of every vertex in the canonical ordering, and the certificate of that ordering."""
    if g.order == 0:
        return [], ()
    search = _Search(g.adjacency)
    search.search(refine(g.adjacency, [0] * g.order), [])
    assert search.best is not None
    cert, position = search.best
    return position, cert


def canonical_graph(g: AbstractGraph) -> AbstractGraph:
    position, _ = canonical_order(g)
    return g.relabelled(position)


def canonical_form(g: AbstractGraph) -> bytes:
    """graph6 bytes of the canonical relabelling; equal exactly for isomorphic graphs."""
    canon = canonical_graph(g).to_networkx()
    return nx.to_graph6_bytes(canon, nodes=range(g.order), header=False).strip()


def isomorphic(g: AbstractGraph, h: AbstractGraph) -> dict[int, int] | None:
    """An adjacency-preserving bijection g -> h, or None."""
    if g.order != h.order or g.size != h.size or sorted(g.degrees()) != sorted(h.degrees()):
        return None
    pos_g, cert_g = canonical_order(g)
    pos_h, cert_h = canonical_order(h)
    if cert_g != cert_h:
        return None
    at_position = [0] * h.order
    for v, pos in enumerate(pos_h):
        at_position[pos] = v
    return {v: at_position[pos_g[v]] for v in range(g.order)}
