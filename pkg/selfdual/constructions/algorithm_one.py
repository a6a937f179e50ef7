"""
Algorithm 1: grow a self-dual polyhedron inside its radial graph.

The cursor marks two quadrangles [a,B,b,C] and [b,B,c,A] of the radial graph sharing the edge bB. One
Z-transformation deletes bB and inserts a primal vertex d and a dual vertex D with edges Db, Dc, dD, dB, dC,
leaving the quadrangles [a,B,d,C], [d,B,c,D], [b,D,c,A] and [d,D,b,C]. In the primal this is the edge split of
ab towards c, and in the dual the matching split of AB towards C, so c and C gain one degree each and the
correspondence v_i -> f_i stays an isomorphism.
"""

from dataclasses import dataclass
from enum import StrEnum

from loguru import logger

from selfdual.config import settings
from selfdual.constructions.seeds import seed_cube, seed_green
from selfdual.constructions.tuples import DegreeTuple
from selfdual.errors import InvalidCursor, InvalidParameter
from selfdual.planar_map.builder import MapBuilder
from selfdual.planar_map.dart_map import PlanarMap
from selfdual.planar_map.radial import Cursor, LabeledRadial, VertexClass, check_cursor, primal_from_radial


class RelabelMode(StrEnum):
    CONTINUE = "continue"  # c, C keep growing
    ADVANCE = "advance"  # c, C are finished; the next pair starts growing


class RadialGrower:
    """Mutable radial graph with a cursor; each Z-transformation is a constant number of dart edits."""

    def __init__(self, r: LabeledRadial) -> None:
        if r.cursor is None:
            raise InvalidCursor("radial has no cursor")
        self.builder = MapBuilder(r.map)
        self.classes = list(r.classes)
        self.indices = list(r.indices)
        self.next_index = {cls: r.class_size(cls) + 1 for cls in VertexClass}
        self.roles = r.cursor.roles()
        self.last_inserted = r.last_inserted
        self.chord: int | None = None  # dart b->B of the current cursor, once known
        self.applications = 0

    @property
    def edits(self) -> int:
        return self.builder.edits

    def _new(self, cls: VertexClass) -> int:
        v = self.builder.add_vertex()
        self.classes.append(cls)
        self.indices.append(self.next_index[cls])
        self.next_index[cls] += 1
        return v

    def z(self) -> None:
        if self.last_inserted is not None:
            raise InvalidCursor("relabel the cursor before the next Z-transformation")
        bld = self.builder
        nxt, prv = bld.nxt, bld.prv
        roles = self.roles
        a, b, B, c = roles["a"], roles["b"], roles["B"], roles["c"]
        e = self.chord if self.chord is not None else bld.find_dart(b, B)
        if e is None or bld.tails[e] != b or bld.head(e) != B:
            raise InvalidCursor("cursor chord bB is not an edge")
        # corners of the two quadrangles at c and C, read off the darts around the chord
        turn = bld.head(nxt[e ^ 1])
        if turn == c:
            forward = True
            corner_c, corner_C = nxt[e ^ 1] ^ 1, nxt[e] ^ 1
        elif turn == a:
            forward = False
            corner_c, corner_C = prv[prv[e ^ 1] ^ 1], prv[prv[e] ^ 1]
        else:
            raise InvalidCursor("the faces around the cursor chord are not the cursor quadrangles")
        d = self._new(VertexClass.PRIMAL)
        D = self._new(VertexClass.DUAL)
        to_D = bld.add_pendant(e, D)
        to_d = bld.add_pendant(e ^ 1, d)
        bld.remove_edge(e)
        c_to_D = bld.add_edge(corner_c, to_D ^ 1)
        C_to_d = bld.add_edge(corner_C, to_d ^ 1)
        # rotation at D is (b, c, d) and at d is (B, C, D), mirrored on the other orientation
        if forward:
            D_to_d = bld.add_edge(c_to_D ^ 1, C_to_d ^ 1)
        else:
            D_to_d = bld.add_edge(to_D ^ 1, to_d ^ 1)
        self.chord = D_to_d ^ 1
        self.last_inserted = (d, D)
        self.applications += 1

    def relabel(self, mode: RelabelMode | str) -> None:
        if self.last_inserted is None:
            raise InvalidCursor("no Z-transformation to relabel after")
        d, D = self.last_inserted
        roles = self.roles
        if mode is not RelabelMode.CONTINUE and mode is not RelabelMode.ADVANCE:
            mode = RelabelMode(mode)
        if mode is RelabelMode.CONTINUE:
            roles["a"], roles["A"] = roles["b"], roles["B"]
        else:
            roles["a"], roles["A"] = roles["c"], roles["C"]
            roles["c"], roles["C"] = roles["b"], roles["B"]
        roles["b"], roles["B"] = d, D
        self.last_inserted = None

    def freeze(self) -> LabeledRadial:
        return LabeledRadial(
            self.builder.freeze(),
            tuple(self.classes),
            tuple(self.indices),
            Cursor(**self.roles),
            self.last_inserted,
        )


def z_transform(r: LabeledRadial) -> LabeledRadial:
    """One Z-transformation. The result keeps the old cursor and records (d, D) until it is relabelled."""
    check_cursor(r)
    grower = RadialGrower(r)
    grower.z()
    out = grower.freeze()
    out.validate(full=settings.SELFDUAL_VALIDATE_SURGERY)
    return out


def relabel_after_z(r: LabeledRadial, mode: RelabelMode | str) -> LabeledRadial:
    """Move the cursor after a Z-transformation; the map itself is untouched."""
    if r.last_inserted is None:
        raise InvalidCursor("radial was not just produced by a Z-transformation")
    grower = RadialGrower(r)
    grower.relabel(mode)
    out = LabeledRadial(r.map, r.classes, r.indices, Cursor(**grower.roles))
    check_cursor(out)
    return out


@dataclass(frozen=True)
class AlgorithmOneRun:
    radial: LabeledRadial
    polytope: PlanarMap
    applications: int
    edits: int


def run_algorithm_one(
    T: DegreeTuple,
    seed: LabeledRadial | None = None,
    stop_after: int | None = None,
    validate: bool | None = None,
) -> AlgorithmOneRun:
    """Apply Z exactly t - 3 times per entry t, relabelling with `continue` in between and `advance` after the
    last application of every entry but the final one.

    `stop_after` halts after that many applications; the result is P of the correspondingly truncated tuple.
    """
    seed = seed if seed is not None else seed_cube()
    check_cursor(seed)
    validate = settings.SELFDUAL_VALIDATE_SURGERY if validate is None else validate
    grower = RadialGrower(seed)
    budget = T.applications if stop_after is None else min(stop_after, T.applications)
    k = T.k
    for i, t in enumerate(T.entries):
        for j in range(t - 3):
            if grower.applications == budget:
                break
            grower.z()
            if validate:
                grower.freeze().validate(full=True)
            if j < t - 4:
                grower.relabel(RelabelMode.CONTINUE)
            elif i < k - 1:
                grower.relabel(RelabelMode.ADVANCE)
    radial = grower.freeze()
    polytope = primal_from_radial(radial)
    logger.debug(
        "P(T) with k={}, order {}: {} applications, {} dart edits",
        T.k,
        polytope.num_vertices,
        grower.applications,
        grower.edits,
    )
    return AlgorithmOneRun(radial, polytope, grower.applications, grower.edits)


def algorithm_one(T: DegreeTuple, seed: LabeledRadial | None = None) -> tuple[LabeledRadial, PlanarMap]:
    run = run_algorithm_one(T, seed)
    return run.radial, run.polytope


def construct_P_prime(n: int, k: int) -> PlanarMap:
    """P'(n; k): Algorithm 1 on the relabelled R(S(n, n)) with the constant (k-2)-tuple (n, ..., n)."""
    if n < 5 or k < 3:
        raise InvalidParameter(f"P'(n; k) needs n >= 5 and k >= 3, got n={n}, k={k}")
    return run_algorithm_one(DegreeTuple((n,) * (k - 2)), seed_green(n)).polytope
