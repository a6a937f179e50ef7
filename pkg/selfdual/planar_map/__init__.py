from selfdual.planar_map.abstract import (
    AbstractGraph,
    DegreeMode,
    DegreeSequence,
    induced_by_degree,
    is_three_connected,
)
from selfdual.planar_map.dart_map import (
    PlanarMap,
    build_map,
    build_map_from_faces,
    degree_sequence,
    dual,
    faces,
    is_polyhedral_map,
)
from selfdual.planar_map.radial import (
    Cursor,
    LabeledRadial,
    VertexClass,
    every_four_cycle_bounds_face,
    primal_from_radial,
    radial,
)
from selfdual.planar_map.surgery import edge_split

__all__ = [
    "AbstractGraph",
    "Cursor",
    "DegreeMode",
    "DegreeSequence",
    "LabeledRadial",
    "PlanarMap",
    "VertexClass",
    "build_map",
    "build_map_from_faces",
    "degree_sequence",
    "dual",
    "edge_split",
    "every_four_cycle_bounds_face",
    "faces",
    "induced_by_degree",
    "is_polyhedral_map",
    "is_three_connected",
    "primal_from_radial",
    "radial",
]
