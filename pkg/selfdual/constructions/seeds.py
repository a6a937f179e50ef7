"""
Labelled radial graphs that Algorithm 1 starts from.

Seeds use the interleaved vertex ids v_i -> 2i - 2 and f_i -> 2i - 1, so vertices inserted later by the
Z-transformation (always one v and one f, in that order) continue the same numbering.
"""

from collections.abc import Mapping

from selfdual.constructions.direct import construct_S
from selfdual.errors import InvalidParameter, MissingLabels
from selfdual.planar_map.radial import Cursor, LabeledRadial, VertexClass, check_cursor, radial
from selfdual.planar_map.solids import tetrahedron


def interleaved_id(cls: VertexClass, index: int) -> int:
    return 2 * index - 2 if cls is VertexClass.PRIMAL else 2 * index - 1


def _interleave(r: LabeledRadial, index_of: Mapping[int, int], cursor: Mapping[str, str]) -> LabeledRadial:
    """Give every radial vertex the index in `index_of` and renumber it to its interleaved id."""
    new_id = [interleaved_id(r.classes[v], index_of[v]) for v in range(r.map.num_vertices)]
    if sorted(new_id) != list(range(len(new_id))):
        raise MissingLabels("seed labelling is not a bijection onto v1..vN, f1..fN")
    classes = [VertexClass.PRIMAL] * len(new_id)
    indices = [0] * len(new_id)
    for v, nid in enumerate(new_id):
        classes[nid] = r.classes[v]
        indices[nid] = index_of[v]
    relabelled = LabeledRadial(r.map.renumbered(new_id), tuple(classes), tuple(indices))
    roles = {role: relabelled.vertex(name) for role, name in cursor.items()}
    seeded = relabelled.with_cursor(Cursor(**roles))
    check_cursor(seeded)
    return seeded


def seed_cube() -> LabeledRadial:
    """Radial graph of the tetrahedron (the cube) with cursor a=v2, A=f2, c=v3, C=f3, b=v4, B=f4.

    f_j is the face of the tetrahedron that misses v_{5-j} for j = 1, 4, and misses v_j for j = 2, 3, so v1
    is incident to f1, f2 and f3.
    """
    r = radial(tetrahedron())
    missing_to_index = {0: 4, 1: 2, 2: 3, 3: 1}
    index_of: dict[int, int] = {}
    for v in range(r.map.num_vertices):
        if r.classes[v] is VertexClass.PRIMAL:
            index_of[v] = v + 1
        else:
            (missing,) = set(range(4)) - set(r.map.neighbours(v))
            index_of[v] = missing_to_index[missing]
    return _interleave(r, index_of, {"a": "v2", "A": "f2", "b": "v4", "B": "f4", "c": "v3", "C": "f3"})


def green_incidences(n: int) -> set[tuple[int, int]]:
    """Pairs (i, j) with v_i adjacent to f_j in the relabelled radial graph of S(n, n).

    A Hamiltonian cycle v1, f2, v3, ..., v_{N-1}, f_N, v_N, f_{N-1}, ..., v2, f1 (N = 2n - 2) plus four fans:
    v1 and f1 towards odd indices 3..N-1, v_N and f_N towards even indices 2..N-2.
    """
    big = 2 * n - 2
    cycle = [("v" if i % 2 else "f", i) for i in range(1, big + 1)]
    cycle += [("v" if i % 2 == 0 else "f", i) for i in range(big, 0, -1)]
    pairs: set[tuple[int, int]] = set()
    for (k1, i1), (k2, i2) in zip(cycle, cycle[1:] + cycle[:1]):
        pairs.add((i1, i2) if k1 == "v" else (i2, i1))
    for i in range(3, big, 2):
        pairs.add((1, i))
        pairs.add((i, 1))
    for i in range(2, big - 1, 2):
        pairs.add((big, i))
        pairs.add((i, big))
    return pairs


def seed_green(n: int) -> LabeledRadial:
    """R(S(n, n)) relabelled so that Algorithm 1 grows high-degree vertices away from v1 and v_{2n-2}.

    Cursor a=v2, A=f2, b=v1, B=f1, c=v3, C=f3.
    """
    if n < 5:
        raise InvalidParameter(f"the relabelled seed needs n >= 5, got {n}")
    s = construct_S(n, n)
    r = radial(s)
    # S(n, n) labels -> primal indices of the new labelling
    index_of: dict[int, int] = {}
    for i in range(1, n):
        index_of[s.vertex(f"v{i}")] = 2 * i - 1
    index_of[s.vertex(f"v{n}")] = 2
    for j in range(1, n - 1):
        index_of[s.vertex(f"w{j}")] = 2 * (n - j)

    incidences = green_incidences(n)
    wanted: dict[frozenset[int], int] = {}
    for j in range(1, 2 * n - 1):
        wanted[frozenset(i for i, jj in incidences if jj == j)] = j
    for x in range(r.map.num_vertices):
        if r.classes[x] is VertexClass.DUAL:
            around = frozenset(index_of[v] for v in r.map.neighbours(x))
            if around not in wanted:
                raise MissingLabels(f"face of S({n},{n}) on v{sorted(around)} has no counterpart in the new labelling")
            index_of[x] = wanted[around]
    return _interleave(r, index_of, {"a": "v2", "A": "f2", "b": "v1", "B": "f1", "c": "v3", "C": "f3"})
