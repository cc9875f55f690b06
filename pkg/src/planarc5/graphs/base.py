# src/planarc5/graphs/base.py
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import networkx as nx
import numpy as np

from planarc5.config import get_settings
from planarc5.errors import GraphError

# A vertex set is a plain int bitmask: bit i set <=> vertex i is a member.
VertexSet = int


def iter_bits(mask: VertexSet) -> Iterator[int]:
    """Yield the members of a bitmask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> list[int]:
    return list(iter_bits(mask))


@dataclass(frozen=True)
class Graph:
    n: int                   # vertex count, labels 0..n-1
    adj: tuple[int, ...]     # adj[i] = neighbour bitmask of vertex i

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def full(self) -> VertexSet:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return members(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def is_connected(self) -> bool:
        return self.n > 0 and connected_within(self, self.full)

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(range(self.n))
        G.add_edges_from(self.edges())
        return G

    @classmethod
    def from_networkx(cls, G: nx.Graph) -> Graph:
        # relabel to 0..n-1 following the graph's node order
        index = {node: i for i, node in enumerate(G.nodes())}
        return from_edges(len(index), [(index[a], index[b]) for a, b in G.edges()])


def _check_size(n: int) -> None:
    limit = get_settings().max_vertices
    if n < 0 or n > limit:
        raise GraphError(f"vertex count {n} outside 0..{limit}")


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph; duplicate edges collapse, loops and bad endpoints raise."""
    _check_size(n)
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def is_simple(g: Graph) -> bool:
    """Full scan for symmetry and irreflexivity."""
    if len(g.adj) != g.n:
        return False
    for i, row in enumerate(g.adj):
        if row >> g.n or row >> i & 1:
            return False
        if any(not g.adj[j] >> i & 1 for j in iter_bits(row)):
            return False
    return True


def connected_within(g: Graph, mask: VertexSet) -> bool:
    """True when the subgraph induced by `mask` is connected (empty counts as not)."""
    if not mask:
        return False
    seen = mask & -mask
    frontier = seen
    while frontier:
        reach = 0
        for v in iter_bits(frontier):
            reach |= g.adj[v]
        frontier = reach & mask & ~seen
        seen |= frontier
    return seen == mask


def common_neighbors(g: Graph, u: int, w: int) -> VertexSet:
    check_vertex(g, u)
    check_vertex(g, w)
    if u == w:
        raise GraphError("common_neighbors needs two distinct vertices")
    return g.adj[u] & g.adj[w]


def induced_subgraph(g: Graph, s: VertexSet) -> Graph:
    """G[s], relabelled 0..|s|-1 in increasing vertex order."""
    if s < 0 or s >> g.n:
        raise GraphError("vertex set reaches outside the graph")
    order = members(s)
    pos = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        rows.append(vertex_set(pos[x] for x in iter_bits(g.adj[v] & s)))
    return Graph(len(order), tuple(rows))


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    """Erdos-Renyi G(n, p) sample."""
    _check_size(n)
    coin = np.triu(rng.random((n, n)) < p, k=1)
    us, vs = np.nonzero(coin)
    return from_edges(n, zip(us.tolist(), vs.tolist()))


def check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
