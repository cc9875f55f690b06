# src/planarc5/lemmas/regions.py
from __future__ import annotations

from pydantic import BaseModel

from planarc5.counting.cycles import vertex_c5_loads
from planarc5.errors import GraphError
from planarc5.graphs.base import Graph, common_neighbors, vertex_set
from planarc5.planarity.embedding import PlaneEmbedding, cycle_sides, face_components


class EmptyK2kWitness(BaseModel):
    u: int
    w: int
    centers: list[int]


def natural_order(e: PlaneEmbedding, u: int, w: int) -> list[int]:
    """
    Common neighbours of u and w in clockwise order around u, starting right
    after the gap that holds the outer face. The bounded region spanned by the
    first and last of them then contains every other one.
    """
    common = common_neighbors(e.base, u, w)
    z = [x for x in e.rotation[u] if common >> x & 1]
    k = len(z)
    if k < 2:
        return z
    for i in range(k):
        a, b = z[i], z[(i + 1) % k]
        label = face_components(e, (u, a, w, b))
        # the face in the angle at u just clockwise of a lies in gap i
        if label[e.outer_face] == label[e.face_of(a, u)]:
            return z[i + 1 :] + z[: i + 1]
    raise GraphError(f"outer face not found around {u}")    # unreachable on a valid embedding


def find_empty_k2k(e: PlaneEmbedding, k: int) -> list[EmptyK2kWitness]:
    """Every (u, w, k consecutive common neighbours) whose bounded region holds only the inner centres."""
    if k < 2:
        raise GraphError("k must be at least 2")
    g = e.base
    found = []
    for u in range(g.n):
        for w in range(u + 1, g.n):
            if (g.adj[u] & g.adj[w]).bit_count() < k:
                continue
            order = natural_order(e, u, w)
            for s in range(len(order) - k + 1):
                window = order[s : s + k]
                inside, _ = cycle_sides(e, (u, window[0], w, window[-1]))
                if inside == vertex_set(window[1:-1]):
                    found.append(EmptyK2kWitness(u=u, w=w, centers=window))
    return found


def gap_profile(e: PlaneEmbedding, u: int, w: int) -> list[int]:
    """Vertices strictly inside each region u z_i w z_{i+1}, consecutive z's in natural order."""
    order = natural_order(e, u, w)
    return [
        cycle_sides(e, (u, a, w, b))[0].bit_count() for a, b in zip(order, order[1:])
    ]


def min_vertex_load(g: Graph) -> tuple[int, int]:
    """(vertex, load) of least induced-C5 load, smallest index on ties."""
    if g.n < 1:
        raise GraphError("min_vertex_load needs at least one vertex")
    loads = vertex_c5_loads(g)
    v = min(range(g.n), key=lambda i: (loads[i], i))
    return v, loads[v]


def max_common_neighbors(g: Graph) -> tuple[int, int, int]:
    """(u, w, t) with t = |N(u) & N(w)| largest, i.e. the biggest K_{2,t} in g."""
    if g.n < 2:
        raise GraphError("max_common_neighbors needs at least two vertices")
    best = (0, 1, -1)
    for u in range(g.n):
        for w in range(u + 1, g.n):
            t = (g.adj[u] & g.adj[w]).bit_count()
            if t > best[2]:
                best = (u, w, t)
    return best
