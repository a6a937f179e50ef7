"""Two non-isomorphic self-dual polyhedra for every admissible tuple with at least three entries."""

from collections.abc import Iterator
from dataclasses import dataclass
from enum import StrEnum
from itertools import chain, permutations

from loguru import logger

from selfdual.constructions.algorithm_one import algorithm_one, construct_P_prime
from selfdual.constructions.algorithm_two import construct_G
from selfdual.constructions.tuples import DegreeTuple
from selfdual.errors import InvalidTuple, PreconditionViolated
from selfdual.planar_map.dart_map import PlanarMap
from selfdual.planar_map.radial import radial
from selfdual.verify.canonical import canonical_form, isomorphic
from selfdual.verify.fingerprint import degree_fingerprint, degree_profile


class WitnessBranch(StrEnum):
    SWAP = "swap"  # P(t1, t2, ...) vs P(t2, t1, ...)
    PRIME = "prime"  # P((n, ..., n)) vs P'(n; k)
    ALGORITHM_TWO = "algorithm-two"  # P((4, ..., 4)) vs G_{k+4}


@dataclass(frozen=True)
class WitnessPair:
    first: PlanarMap
    second: PlanarMap
    branch: WitnessBranch
    first_source: str
    second_source: str


def _orderings(T: DegreeTuple) -> Iterator[tuple[int, ...]]:
    """Orderings with t1 != 5 and t1 != t2, those with t3 != 4 first; the rest keeps T's order."""
    values = sorted(set(T.entries))
    for strict in (True, False):
        for a in values:
            if a == 5:
                continue
            for b in values:
                if b == a:
                    continue
                rest = list(T.entries)
                rest.remove(a)
                rest.remove(b)
                thirds = sorted(set(rest)) if rest else [None]
                for c in thirds:
                    if strict and T.k >= 4 and c == 4:
                        continue
                    if not strict and not (T.k >= 4 and c == 4):
                        continue
                    tail = list(rest)
                    if c is not None:
                        tail.remove(c)
                        tail.insert(0, c)
                    yield (a, b, *tail)


def _distinct_permutations(entries: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    seen: set[tuple[int, ...]] = set()
    for candidate in permutations(entries):
        if candidate not in seen:
            seen.add(candidate)
            yield candidate


def _swap_pair(T: DegreeTuple) -> WitnessPair:
    ordered = next(_orderings(T))
    swapped = (ordered[1], ordered[0], *ordered[2:])
    first = algorithm_one(DegreeTuple(ordered))[1]
    second = algorithm_one(DegreeTuple(swapped))[1]
    if isomorphic(first.underlying(), second.underlying()) is None:
        return WitnessPair(first, second, WitnessBranch.SWAP, f"P{DegreeTuple(ordered)}", f"P{DegreeTuple(swapped)}")

    logger.warning("P{} and P{} are isomorphic, searching other orderings", DegreeTuple(ordered), DegreeTuple(swapped))
    base = canonical_form(first.underlying())
    for candidate in chain(_orderings(T), _distinct_permutations(T.entries)):
        other = algorithm_one(DegreeTuple(candidate))[1]
        if canonical_form(other.underlying()) != base:
            return WitnessPair(
                first, other, WitnessBranch.SWAP, f"P{DegreeTuple(ordered)}", f"P{DegreeTuple(candidate)}"
            )
    raise PreconditionViolated(f"no two orderings of {T} gave non-isomorphic polyhedra")


def two_witnesses(T: DegreeTuple) -> WitnessPair:
    if T.k < 3:
        raise InvalidTuple(f"two witnesses need at least three entries, got {T}")
    if not T.is_constant():
        pair = _swap_pair(T)
    else:
        n, k = T.entries[0], T.k
        first = algorithm_one(T)[1]
        if n >= 5:
            pair = WitnessPair(first, construct_P_prime(n, k), WitnessBranch.PRIME, f"P{T}", f"P'({n};{k})")
        else:
            pair = WitnessPair(first, construct_G(k + 4), WitnessBranch.ALGORITHM_TWO, f"P{T}", f"G_{k + 4}")
        if isomorphic(pair.first.underlying(), pair.second.underlying()) is not None:
            raise PreconditionViolated(f"{pair.first_source} and {pair.second_source} are isomorphic")
    logger.debug("witnesses for {}: {} and {} ({})", T, pair.first_source, pair.second_source, pair.branch)
    return pair


@dataclass(frozen=True)
class WitnessEvidence:
    """The invariant that tells the two witnesses of a branch apart, evaluated on both."""

    invariant: str
    first: str
    second: str
    separates: bool


def witness_evidence(pair: WitnessPair) -> WitnessEvidence:
    """Swap pairs differ in H+ once every vertex carries its degree in the polyhedron, so the end-vertices
    of H+ are told apart. P' has a K2 component in H+ of its radial and P((n, ..., n)) has none. G_p has
    H3 = P3 u K1 while P((4, ..., 4)) has H3 = 2K2."""
    if pair.branch is WitnessBranch.SWAP:
        a, b = degree_profile(pair.first, "at-least-4"), degree_profile(pair.second, "at-least-4")
        ends_a = sorted(deg for deg, inner in a if inner == 1)
        ends_b = sorted(deg for deg, inner in b if inner == 1)
        return WitnessEvidence("H+ with degrees", f"ends {ends_a}", f"ends {ends_b}", a != b)
    if pair.branch is WitnessBranch.PRIME:
        k2_first = degree_fingerprint(radial(pair.first), "at-least-4").count("K2")
        k2_second = degree_fingerprint(radial(pair.second), "at-least-4").count("K2")
        return WitnessEvidence("K2 in H+(R)", str(k2_first), str(k2_second), k2_first == 0 and k2_second >= 1)
    h3_first = degree_fingerprint(pair.first, "exactly-3").describe()
    h3_second = degree_fingerprint(pair.second, "exactly-3").describe()
    return WitnessEvidence("H3", h3_first, h3_second, h3_first == "2K2" and h3_second == "P3 ∪ K1")
