"""
Graphs entered by hand from their drawings, used to check the constructions against the pictures.

Vertex labels are 1-based. Rotation lists are counter-clockwise; a drawing fixes the embedding only up to
reflection, so comparisons accept the mirror image too.
"""

from collections.abc import Sequence

from selfdual.planar_map.dart_map import PlanarMap, build_map

# G_7, G_8, G_9
DRAWN_G_EDGES: dict[int, list[tuple[int, int]]] = {
    7: [(1, 2), (2, 3), (3, 5), (1, 5), (1, 6), (2, 4), (3, 4), (4, 6), (5, 6), (4, 7), (5, 7), (6, 7)],
    8: [(1, 2), (2, 3), (3, 5), (1, 5), (1, 6), (2, 4), (3, 4), (4, 6), (4, 7), (5, 7), (6, 7), (5, 8), (6, 8), (7, 8)],
    9: [
        (1, 2), (2, 3), (3, 5), (1, 5), (1, 6), (2, 4), (3, 4), (4, 6), (4, 7), (5, 7), (5, 8), (6, 8), (7, 8),
        (6, 9), (7, 9), (8, 9),
    ],
}  # fmt: skip

# radial graph of P((6,6)) grown from the labelled cube; keys interleave v_i and f_i like the seeds do
P66_RADIAL_ROTATION: dict[str, tuple[str, ...]] = {
    "v1": ("f1", "f2", "f3"),
    "f1": ("v2", "v3", "v1"),
    "v2": ("f4", "f1", "f3"),
    "f2": ("v4", "v1", "v3"),
    "v3": ("f2", "f1", "f4", "f6", "f7", "f5"),
    "f3": ("v2", "v1", "v4", "v6", "v7", "v5"),
    "v4": ("f3", "f2", "f5"),
    "f4": ("v2", "v5", "v3"),
    "v5": ("f4", "f3", "f6"),
    "f5": ("v4", "v3", "v6"),
    "v6": ("f5", "f7", "f9", "f10", "f8", "f3"),
    "f6": ("v5", "v7", "v9", "v10", "v8", "v3"),
    "v7": ("f6", "f3", "f8"),
    "f7": ("v6", "v3", "v8"),
    "v8": ("f7", "f6", "f9"),
    "f8": ("v7", "v6", "v9"),
    "v9": ("f8", "f10", "f6"),
    "f9": ("v8", "v10", "v6"),
    "v10": ("f9", "f6", "f10"),
    "f10": ("v9", "v6", "v10"),
}


def drawn_map(rotation: dict[str, tuple[str, ...]], mirrored: bool = False) -> PlanarMap:
    return build_map({v: nbrs[::-1] if mirrored else nbrs for v, nbrs in rotation.items()})


def matches_drawing(m: PlanarMap, names: Sequence[str], rotation: dict[str, tuple[str, ...]]) -> bool:
    """True iff `m`, with vertex v named names[v], is the drawn embedding or its mirror image."""
    order = {name: i for i, name in enumerate(rotation)}
    if sorted(names) != sorted(rotation):
        return False
    by_name = m.renumbered([order[name] for name in names]).with_labels(list(rotation))
    return by_name in (drawn_map(rotation), drawn_map(rotation, mirrored=True))
