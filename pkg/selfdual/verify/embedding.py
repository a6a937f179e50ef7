import networkx as nx
from loguru import logger

from selfdual.errors import InvalidParameter
from selfdual.planar_map.abstract import AbstractGraph
from selfdual.planar_map.dart_map import PlanarMap, build_map


def planar_embed(g: AbstractGraph) -> PlanarMap | None:
    """A plane embedding of a connected simple graph, or None when the graph is not planar.

    For 3-connected graphs the embedding is unique up to reflection, so faces and duals do not depend on which
    embedding networkx returns.
    """
    graph = g.to_networkx()
    if g.order < 2 or not nx.is_connected(graph):
        raise InvalidParameter("planar_embed needs a connected graph with at least one edge")
    is_planar, embedding = nx.check_planarity(graph)
    if not is_planar:
        logger.debug("graph on {} vertices and {} edges is not planar", g.order, g.size)
        return None
    # networkx lists neighbours clockwise; maps rotate counter-clockwise
    rotation_system = {v: list(reversed(list(embedding.neighbors_cw_order(v)))) for v in range(g.order)}
    return build_map(rotation_system, g.labels)
