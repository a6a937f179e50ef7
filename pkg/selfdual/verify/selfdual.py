from loguru import logger

from selfdual.constructions.tuples import DegreeTuple, high_degree_indices
from selfdual.errors import LabelsUnavailable, MissingLabels, NotPolyhedral
from selfdual.planar_map.dart_map import PlanarMap, dual, is_polyhedral_map
from selfdual.planar_map.radial import LabeledRadial, VertexClass, primal_from_radial
from selfdual.verify.canonical import isomorphic


def self_dual_witness(m: PlanarMap) -> dict[int, int] | None:
    """Vertex -> face bijection carrying adjacency of m onto adjacency of its dual, or None."""
    if not is_polyhedral_map(m):
        raise NotPolyhedral(f"map {m} is not polyhedral")
    if m.num_vertices != m.num_faces:
        return None
    return isomorphic(m.underlying(), dual(m).underlying())


def is_self_dual(m: PlanarMap) -> bool:
    return self_dual_witness(m) is not None


def check_phi(r: LabeledRadial) -> bool:
    """True iff v_i -> f_i maps the primal extraction of r onto its dual extraction."""
    if r.class_size(VertexClass.PRIMAL) != r.class_size(VertexClass.DUAL):
        raise MissingLabels(
            f"{r.class_size(VertexClass.PRIMAL)} primal and {r.class_size(VertexClass.DUAL)} dual labels cannot pair up"
        )
    primal = primal_from_radial(r, VertexClass.PRIMAL).underlying()
    dual_ = primal_from_radial(r, VertexClass.DUAL).underlying()
    return set(primal.edges()) == set(dual_.edges())


def check_lemma_leaf(T: DegreeTuple, P: PlanarMap) -> bool:
    """Adjacency among the high-degree vertices u_1..u_k of P(T), identified by their construction labels.

    Consecutive u_i are adjacent; u_i ~ u_{i+2} exactly when t_{i+1} = 5; u_i ~ u_{i+3} exactly when
    t_{i+1} = t_{i+2} = 4; no other pair is adjacent. The degrees of the u_i must be the entries of T.
    """
    if P.labels is None:
        raise LabelsUnavailable("P carries no v_i labels")
    try:
        u = [P.vertex(f"v{i}") for i in high_degree_indices(T)]
    except KeyError as exc:
        raise LabelsUnavailable(f"P has no vertex labelled {exc.args[0]}") from None
    t = T.entries
    ok = True
    for i, ui in enumerate(u):
        if P.degree(ui) != t[i]:
            logger.debug("u{} = {} has degree {}, expected {}", i + 1, P.label(ui), P.degree(ui), t[i])
            ok = False
        for j in range(i + 1, len(u)):
            if j == i + 1:
                expected = True
            elif j == i + 2:
                expected = t[i + 1] == 5
            elif j == i + 3:
                expected = t[i + 1] == t[i + 2] == 4
            else:
                expected = False
            if (P.find_dart(ui, u[j]) is not None) != expected:
                logger.debug("u{} ~ u{} should be {} in P{}", i + 1, j + 1, expected, T)
                ok = False
    return ok
