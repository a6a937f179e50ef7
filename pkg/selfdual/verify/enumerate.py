"""
Exhaustive realisations of a degree sequence, one per isomorphism class.

Vertices are processed in order of non-increasing degree; vertex i picks its remaining neighbours among the later
vertices. Later vertices with the same degree, residual and neighbourhood are interchangeable, so only how many
of each such group are picked matters. The residual degrees of the later vertices carry no other constraint, so
a branch is live exactly when they are graphical.
"""

from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from itertools import product

import networkx as nx
from loguru import logger
from pydantic import BaseModel, Field, field_validator, model_validator

from selfdual.config import settings
from selfdual.errors import OddDegreeSum, OrderCapExceeded
from selfdual.planar_map.abstract import AbstractGraph, DegreeSequence, is_three_connected
from selfdual.verify.canonical import canonical_form
from selfdual.verify.embedding import planar_embed
from selfdual.verify.selfdual import is_self_dual


class EnumerationQuery(BaseModel):
    degrees: tuple[int, ...] = Field(..., description="target degree sequence, any order")
    planar: bool = Field(default=False, description="keep planar realisations only")
    three_connected: bool = Field(default=False, description="keep 3-connected realisations only")
    self_dual: bool = Field(default=False, description="keep self-dual polyhedral realisations only")
    limit: int | None = Field(default=None, ge=1, description="stop after this many classes")

    @field_validator("degrees")
    @classmethod
    def _sorted(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        if any(d < 0 for d in value):
            raise ValueError("degrees must be non-negative")
        return tuple(sorted(value, reverse=True))

    @model_validator(mode="after")
    def _self_dual_needs_polyhedral(self) -> "EnumerationQuery":
        if self.self_dual:
            self.planar = True
            self.three_connected = True
        return self

    @classmethod
    def of(cls, sequence: DegreeSequence | str, **filters) -> "EnumerationQuery":
        if isinstance(sequence, str):
            sequence = DegreeSequence.parse(sequence)
        return cls(degrees=sequence.values, **filters)

    @property
    def sequence(self) -> DegreeSequence:
        return DegreeSequence(self.degrees)

    def describe(self) -> str:
        filters = [name for name in ("planar", "three_connected", "self_dual") if getattr(self, name)]
        return f"{self.sequence} [{', '.join(filters) or 'no filters'}]"


class _Realiser:
    def __init__(self, degrees: tuple[int, ...]) -> None:
        self.degrees = degrees
        self.n = len(degrees)
        self.residual = list(degrees)
        self.adj: list[set[int]] = [set() for _ in range(self.n)]

    def choices(self, i: int) -> Iterator[list[int]]:
        """Neighbour sets for vertex i among later vertices, one per orbit of interchangeable vertices."""
        groups: dict[tuple, list[int]] = {}
        for j in range(i + 1, self.n):
            if self.residual[j] > 0:
                key = (self.degrees[j], self.residual[j], frozenset(self.adj[j]))
                groups.setdefault(key, []).append(j)
        members = list(groups.values())
        need = self.residual[i]
        for counts in product(*(range(len(m) + 1) for m in members)):
            if sum(counts) == need:
                yield [v for group, c in zip(members, counts) for v in group[:c]]

    def _apply(self, i: int, chosen: list[int]) -> None:
        for j in chosen:
            self.adj[i].add(j)
            self.adj[j].add(i)
            self.residual[j] -= 1
        self.residual[i] = 0

    def _undo(self, i: int, chosen: list[int]) -> None:
        for j in chosen:
            self.adj[i].discard(j)
            self.adj[j].discard(i)
            self.residual[j] += 1
        self.residual[i] = len(chosen)

    def _live(self, i: int) -> bool:
        rest = self.residual[i + 1 :]
        return not rest or nx.is_graphical(rest)

    def graphs(self, i: int = 0) -> Iterator[AbstractGraph]:
        if i == self.n:
            yield AbstractGraph(tuple(frozenset(s) for s in self.adj))
            return
        for chosen in list(self.choices(i)):
            self._apply(i, chosen)
            if self._live(i):
                yield from self.graphs(i + 1)
            self._undo(i, chosen)

    def graphs_from(self, first: list[int]) -> Iterator[AbstractGraph]:
        self._apply(0, first)
        if self._live(0):
            yield from self.graphs(1)
        self._undo(0, first)


def _passes(g: AbstractGraph, query: EnumerationQuery) -> bool:
    if query.three_connected and not is_three_connected(g):
        return False
    if query.planar:
        graph = g.to_networkx()
        if g.order < 2 or not nx.is_connected(graph):
            return nx.check_planarity(graph)[0]
        embedded = planar_embed(g)
        if embedded is None:
            return False
        if query.self_dual and not is_self_dual(embedded):
            return False
    return True


def _classes(graphs: Iterator[AbstractGraph], query: EnumerationQuery) -> dict[bytes, bool]:
    verdicts: dict[bytes, bool] = {}
    for g in graphs:
        canon = canonical_form(g)
        if canon not in verdicts:
            verdicts[canon] = _passes(g, query)
    return verdicts


def _subtree(query: EnumerationQuery, first: list[int]) -> dict[bytes, bool]:
    return _classes(_Realiser(query.degrees).graphs_from(first), query)


def enumerate_realizations(
    query: EnumerationQuery, order_cap: int | None = None, workers: int | None = None
) -> list[bytes]:
    """Canonical graph6 of every isomorphism class realising the sequence and passing the query's filters."""
    order_cap = settings.SELFDUAL_ORDER_CAP if order_cap is None else order_cap
    workers = settings.SELFDUAL_ORACLE_WORKERS if workers is None else workers
    seq = query.sequence
    if not seq.is_even():
        raise OddDegreeSum(f"{seq} has odd degree sum {seq.total}")
    if len(seq) > order_cap:
        raise OrderCapExceeded(f"{seq} has order {len(seq)}, the cap is {order_cap}")
    if not seq.is_graphic():
        logger.info("{} is not graphical", seq)
        return []

    if workers > 1 and len(seq) > 1:
        firsts = list(_Realiser(query.degrees).choices(0))
        verdicts: dict[bytes, bool] = {}
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_subtree, [query] * len(firsts), firsts):
                for canon, ok in part.items():
                    verdicts.setdefault(canon, ok)
    else:
        verdicts = _classes(_Realiser(query.degrees).graphs(), query)

    found = sorted(canon for canon, ok in verdicts.items() if ok)
    if query.limit is not None:
        found = found[: query.limit]
    logger.info("{}: {} classes examined, {} kept", query.describe(), len(verdicts), len(found))
    return found


def count_realizations(sequence: DegreeSequence | str, **filters) -> int:
    return len(enumerate_realizations(EnumerationQuery.of(sequence, **filters)))


def is_unigraphic(sequence: DegreeSequence | str, polyhedral: bool = True) -> bool:
    """Exactly one realisation, among polyhedral graphs when `polyhedral` is set."""
    return count_realizations(sequence, planar=polyhedral, three_connected=polyhedral) == 1
