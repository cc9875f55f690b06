# src/planarc5/lemmas/basic_bound.py
from __future__ import annotations

import logging
from itertools import combinations
from typing import Iterable

import networkx as nx
from pydantic import BaseModel

from planarc5.counting.cycles import iter_induced_c5, triple_c5_count
from planarc5.errors import GraphError
from planarc5.graphs.base import Graph, VertexSet, check_vertex, iter_bits, members

logger = logging.getLogger(__name__)


class LemmaOneReport(BaseModel):
    v: int
    u: int
    w: int
    X: list[int]
    Y: list[int]
    bound: int
    actual: int
    forest_ok: bool
    uw_adjacent: bool

    @property
    def sound(self) -> bool:
        return self.actual <= self.bound and self.forest_ok


def cross_forest_check(g: Graph, X: VertexSet, Y: VertexSet) -> bool:
    """True iff the bipartite graph of g-edges between X and Y has no cycle."""
    if X & Y:
        raise GraphError("X and Y must be disjoint")
    H = nx.Graph()
    H.add_nodes_from(iter_bits(X | Y))
    for x in iter_bits(X):
        H.add_edges_from((x, y) for y in iter_bits(g.adj[x] & Y))
    if H.number_of_nodes() == 0:
        return True
    return nx.is_forest(H)


def basic_bound(
    g: Graph, v: int, u: int, w: int, cycles: list[VertexSet] | None = None
) -> LemmaOneReport:
    """
    For distinct neighbours u, w of v: X holds the private neighbours of u with
    a neighbour among the private neighbours of w, Y symmetrically. The number
    of induced C5's through u, v, w is at most |X| + |Y| - 1 on planar hosts.
    """
    for x in (v, u, w):
        check_vertex(g, x)
    if u == w:
        raise GraphError("u and w must be distinct")
    if not (g.has_edge(v, u) and g.has_edge(v, w)):
        raise GraphError(f"{u} and {w} must both be neighbours of {v}")

    x0 = g.adj[u] & ~g.adj[w] & ~(1 << w)
    y0 = g.adj[w] & ~g.adj[u] & ~(1 << u)
    X = sum(1 << x for x in iter_bits(x0) if g.adj[x] & y0)
    Y = sum(1 << y for y in iter_bits(y0) if g.adj[y] & x0)
    size = X.bit_count() + Y.bit_count()
    return LemmaOneReport(
        v=v,
        u=u,
        w=w,
        X=members(X),
        Y=members(Y),
        bound=max(size - 1, 0),
        actual=triple_c5_count(g, u, v, w, cycles=cycles),
        forest_ok=cross_forest_check(g, X, Y),
        uw_adjacent=g.has_edge(u, w),
    )


class SweepResult(BaseModel):
    graphs: int = 0
    checks: int = 0
    violations: list[LemmaOneReport] = []


def lemma_one_sweep(graphs: Iterable[Graph]) -> SweepResult:
    """basic_bound over every v and every unordered pair of its neighbours."""
    result = SweepResult()
    for g in graphs:
        result.graphs += 1
        cycles = list(iter_induced_c5(g))
        for v in range(g.n):
            for u, w in combinations(g.neighbors(v), 2):
                report = basic_bound(g, v, u, w, cycles=cycles)
                result.checks += 1
                if not report.sound:
                    logger.warning("basic bound violated: %s", report.model_dump())
                    result.violations.append(report)
    return result
