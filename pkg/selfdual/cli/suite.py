"""
Acceptance suite: every claim the toolkit reproduces, checked end to end.

Each criterion returns (passed, detail). `quick` shrinks the exhaustive ranges so the suite finishes in seconds.
"""

import random
import time
from collections.abc import Callable
from dataclasses import dataclass
from itertools import product

from loguru import logger

from selfdual.config import settings
from selfdual.constructions import (
    DegreeTuple,
    algorithm_one,
    construct_G,
    construct_Q,
    construct_S,
    run_algorithm_one,
)
from selfdual.constructions.drawings import DRAWN_G_EDGES, P66_RADIAL_ROTATION, matches_drawing
from selfdual.errors import SelfDualError
from selfdual.planar_map import (
    AbstractGraph,
    degree_sequence,
    every_four_cycle_bounds_face,
    is_polyhedral_map,
    primal_from_radial,
    radial,
)
from selfdual.verify import (
    EnumerationQuery,
    WitnessBranch,
    canonical_form,
    check_lemma_leaf,
    check_phi,
    enumerate_realizations,
    is_self_dual,
    isomorphic,
    two_witnesses,
    witness_evidence,
)

@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float


def _same(a: AbstractGraph, b: AbstractGraph) -> bool:
    return isomorphic(a, b) is not None


def construction_soundness(quick: bool, seed: int) -> tuple[bool, str]:
    max_k = 3 if quick else 5
    checked = 0
    for k in range(1, max_k + 1):
        for entries in product(range(4, 9), repeat=k):
            T = DegreeTuple(entries)
            run = run_algorithm_one(T)
            if not (
                is_polyhedral_map(run.polytope)
                and check_phi(run.radial)
                and degree_sequence(run.polytope) == T.target_sequence()
            ):
                return False, f"P{T} fails"
            checked += 1
    return True, f"{checked} tuples"


def _oracle_classes(sequence: str) -> list[bytes]:
    return enumerate_realizations(EnumerationQuery.of(sequence, self_dual=True))


def uniqueness(quick: bool, seed: int) -> tuple[bool, str]:
    pairs = [(3, 3), (4, 3), (4, 4), (5, 3), (5, 4), (5, 5), (6, 4)]
    if quick:
        pairs = [(x, y) for x, y in pairs if x + y - 2 <= 7]
    for x, y in pairs:
        found = _oracle_classes(",".join(map(str, [x, y] + [3] * (x + y - 4))))
        if found != [canonical_form(construct_S(x, y).underlying())]:
            return False, f"{x},{y},3^{x + y - 4}: {len(found)} classes"
    return True, f"{len(pairs)} sequences unique"


# self-dual polyhedra per sequence, as counted by the oracle
REALISATION_COUNTS = {"4^3,3^4": 4, "5,4^2,3^5": 8}


def multiplicity(quick: bool, seed: int) -> tuple[bool, str]:
    sequences = ["4^3,3^4"] if quick else list(REALISATION_COUNTS)
    counts = {seq: len(_oracle_classes(seq)) for seq in sequences}
    detail = ", ".join(f"{seq}: {n} (expected {REALISATION_COUNTS[seq]})" for seq, n in counts.items())
    return all(n == REALISATION_COUNTS[seq] for seq, n in counts.items()), detail


def witness_pairs(quick: bool, seed: int) -> tuple[bool, str]:
    branches: set[WitnessBranch] = set()
    ks = (3,) if quick else (3, 4)
    checked = 0
    for k in ks:
        for entries in product(range(4, 7), repeat=k):
            pair = two_witnesses(DegreeTuple(entries))
            if not (is_self_dual(pair.first) and is_self_dual(pair.second)):
                return False, f"{entries}: a witness is not self-dual"
            if _same(pair.first.underlying(), pair.second.underlying()):
                return False, f"{entries}: witnesses are isomorphic"
            evidence = witness_evidence(pair)
            if not evidence.separates:
                return False, f"{entries}: {evidence.invariant} gives {evidence.first} and {evidence.second}"
            branches.add(pair.branch)
            checked += 1
    return branches == set(WitnessBranch), f"{checked} tuples, branches {sorted(b.value for b in branches)}"


def _random_tuple(rng: random.Random, max_k: int, low: int, high: int) -> DegreeTuple:
    return DegreeTuple(tuple(rng.randint(low, high) for _ in range(rng.randint(1, max_k))))


def adjacency_pattern(quick: bool, seed: int) -> tuple[bool, str]:
    rng = random.Random(seed)
    trials = min(settings.SELFDUAL_LEMMA_TRIALS, 20) if quick else settings.SELFDUAL_LEMMA_TRIALS
    for _ in range(trials):
        T = _random_tuple(rng, 6, 4, 9)
        if not check_lemma_leaf(T, algorithm_one(T)[1]):
            return False, f"P{T} breaks the pattern"
    return True, f"{trials} random tuples"


def cross_identities(quick: bool, seed: int) -> tuple[bool, str]:
    top = 5 if quick else 7
    for x in range(4, top + 1):
        for y in range(4, x + 1):
            s = construct_S(x, y).underlying()
            if not (
                _same(s, algorithm_one(DegreeTuple((x, y)))[1].underlying())
                and _same(s, algorithm_one(DegreeTuple((y, x)))[1].underlying())
            ):
                return False, f"S({x},{y}) differs from P(({x},{y})) or P(({y},{x}))"
            if x >= 5 and is_self_dual(construct_Q(x, y)):
                return False, f"Q({x},{y}) is self-dual"
    if not _same(construct_Q(4, 4).underlying(), construct_S(4, 4).underlying()):
        return False, "Q(4,4) differs from S(4,4)"
    return True, f"x, y up to {top}"


def radial_machinery(quick: bool, seed: int) -> tuple[bool, str]:
    rng = random.Random(seed)
    trials = min(settings.SELFDUAL_RADIAL_TRIALS, 10) if quick else settings.SELFDUAL_RADIAL_TRIALS
    for _ in range(trials):
        T = _random_tuple(rng, 4, 4, 7)
        P = algorithm_one(T)[1]
        r = radial(P)
        bounded = every_four_cycle_bounds_face(r)
        if not (bounded and _same(primal_from_radial(r).underlying(), P.underlying())):
            return False, f"radial of P{T} fails"
        if is_polyhedral_map(P) != bounded:
            return False, f"criteria disagree on P{T}"
    return True, f"{trials} random constructions"


def linear_time(quick: bool, seed: int) -> tuple[bool, str]:
    targets = (10**3, 10**4) if quick else (10**3, 10**4, 10**5)
    runs = []
    for target in targets:
        T = DegreeTuple((6,) * ((target - 4) // 3))
        start = time.perf_counter()
        run = run_algorithm_one(T, validate=False)
        runs.append((run.polytope.num_vertices, run.edits, time.perf_counter() - start))
    ok = True
    for (n1, e1, _), (n2, e2, _) in zip(runs, runs[1:]):
        ratio = (e2 / e1) / (n2 / n1)
        ok = ok and 1 / 1.15 <= ratio <= 1.15
    detail = "; ".join(f"n={n}: {e} edits, {t:.2f}s" for n, e, t in runs)
    if not quick:
        budget = settings.SELFDUAL_LINEAR_TIME_BUDGET
        ok = ok and runs[-1][2] <= budget
        detail += f" (budget {budget:.2f}s at n={runs[-1][0]})"
    return ok, detail


def drawn_graphs(quick: bool, seed: int) -> tuple[bool, str]:
    r66, _ = algorithm_one(DegreeTuple((6, 6)))
    if not (check_phi(r66) and matches_drawing(r66.map, r66.names(), P66_RADIAL_ROTATION)):
        return False, "radial of P((6,6))"
    if not _same(r66.map.underlying(), radial(construct_S(6, 6)).map.underlying()):
        return False, "radial of S(6,6)"
    for p, edges in DRAWN_G_EDGES.items():
        drawn = AbstractGraph.from_edges(p, [(u - 1, v - 1) for u, v in edges])
        if canonical_form(construct_G(p).underlying()) != canonical_form(drawn):
            return False, f"G_{p}"
    return True, "P((6,6)) radial, G_7, G_8, G_9"


CRITERIA: list[tuple[str, Callable[[bool, int], tuple[bool, str]]]] = [
    ("construction soundness", construction_soundness),
    ("uniqueness of S(x,y)", uniqueness),
    ("multiplicity", multiplicity),
    ("witness pairs", witness_pairs),
    ("adjacency of high-degree vertices", adjacency_pattern),
    ("cross-construction identities", cross_identities),
    ("radial machinery", radial_machinery),
    ("linear time", linear_time),
    ("hand-drawn graphs", drawn_graphs),
]


def run_suite(quick: bool = False, seed: int | None = None, only: list[int] | None = None) -> list[CriterionResult]:
    seed = settings.SELFDUAL_SEED if seed is None else seed
    results = []
    for number, (title, check) in enumerate(CRITERIA, start=1):
        if only and number not in only:
            continue
        start = time.perf_counter()
        try:
            passed, detail = check(quick, seed)
        except SelfDualError as exc:
            logger.exception("criterion {} raised", number)
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        seconds = time.perf_counter() - start
        logger.info("criterion {} ({}): {} in {:.2f}s", number, title, "pass" if passed else "FAIL", seconds)
        results.append(CriterionResult(number, title, passed, detail, seconds))
    return results
