"""
Serialisation of maps and graphs.

- text: one vertex per line, `label: n1 n2 n3 ...` (counter-clockwise neighbour labels)
- json-map: the same content as a JSON document
- graph6: via networkx, one line per graph
- DOT: undirected graph with stable vertex and edge order
"""

import networkx as nx
from pydantic import BaseModel, Field

from selfdual.errors import InconsistentRotation
from selfdual.planar_map.abstract import AbstractGraph
from selfdual.planar_map.dart_map import PlanarMap, build_map


def _names(m: PlanarMap) -> list[str]:
    return [m.label(v) for v in range(m.num_vertices)]


# ---------------------------------------------------------------------- text


def map_to_text(m: PlanarMap) -> str:
    names = _names(m)
    return "\n".join(f"{names[v]}: {' '.join(names[u] for u in m.neighbours(v))}" for v in range(m.num_vertices)) + "\n"


def map_from_text(text: str) -> PlanarMap:
    rotation_system: dict[str, list[str]] = {}
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        label, sep, rest = line.partition(":")
        if not sep:
            raise InconsistentRotation(f"line {number}: expected `label: neighbours...`")
        rotation_system[label.strip()] = rest.split()
    return build_map(rotation_system, list(rotation_system))


# ---------------------------------------------------------------------- json-map


class VertexEntry(BaseModel):
    label: str = Field(..., description="Vertex label")
    neighbours: list[str] = Field(..., description="Neighbour labels in counter-clockwise order")


class MapDocument(BaseModel):
    name: str | None = Field(default=None, description="What the map is, e.g. P((6,6))")
    vertices: list[VertexEntry] = Field(..., description="Rotation system, one entry per vertex")

    @classmethod
    def from_map(cls, m: PlanarMap, name: str | None = None) -> "MapDocument":
        names = _names(m)
        return cls(
            name=name,
            vertices=[
                VertexEntry(label=names[v], neighbours=[names[u] for u in m.neighbours(v)])
                for v in range(m.num_vertices)
            ],
        )

    def to_map(self) -> PlanarMap:
        rotation_system = {entry.label: entry.neighbours for entry in self.vertices}
        if len(rotation_system) != len(self.vertices):
            raise InconsistentRotation("duplicate vertex labels")
        return build_map(rotation_system, list(rotation_system))


def map_to_json(m: PlanarMap, name: str | None = None) -> str:
    return MapDocument.from_map(m, name).model_dump_json(indent=2)


def map_from_json(text: str) -> PlanarMap:
    return MapDocument.model_validate_json(text).to_map()


# ---------------------------------------------------------------------- graph6


def to_graph6(g: AbstractGraph) -> str:
    return nx.to_graph6_bytes(g.to_networkx(), nodes=range(g.order), header=False).decode("ascii").strip()


def from_graph6(line: str) -> AbstractGraph:
    return AbstractGraph.from_networkx(nx.from_graph6_bytes(line.strip().encode("ascii")))


# ---------------------------------------------------------------------- DOT


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: AbstractGraph, name: str = "G") -> str:
    lines = [f"graph {_quote(name)} {{"]
    lines.extend(f"  {v} [label={_quote(g.label(v))}];" for v in range(g.order))
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
