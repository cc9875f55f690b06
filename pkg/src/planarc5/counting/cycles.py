# src/planarc5/counting/cycles.py
"""
Bitset counters for 4- and 5-cycles.

Every cycle is rooted at its smallest vertex v and walked v-x1-x2-...; the
closing vertex is counted with a popcount, and each cycle is met once per
direction, hence the final halving.
"""
from __future__ import annotations

from typing import Iterator

from pydantic import BaseModel

from planarc5.errors import CountOverflowError, GraphError
from planarc5.graphs.base import Graph, VertexSet, check_vertex, iter_bits

INT64_MAX = 2**63 - 1


def _checked(count: int) -> int:
    if count > INT64_MAX:
        raise CountOverflowError(f"count {count} does not fit in 64 bits")
    return count


def count_c5(g: Graph, induced: bool = False) -> int:
    adj = g.adj
    total = 0
    for v in range(g.n):
        above = -1 << (v + 1)
        nv = adj[v]
        for x1 in iter_bits(nv & above):
            b1 = 1 << x1
            n1 = adj[x1]
            for x2 in iter_bits(n1 & above):
                if induced and nv >> x2 & 1:
                    continue
                b2 = 1 << x2
                m3 = adj[x2] & above & ~b1
                if induced:
                    m3 &= ~nv & ~n1
                for x3 in iter_bits(m3):
                    m4 = adj[x3] & nv & above & ~b1 & ~b2
                    if induced:
                        m4 &= ~n1 & ~adj[x2]
                    total += m4.bit_count()
    return _checked(total // 2)


def count_c4(g: Graph, induced: bool = False) -> int:
    adj = g.adj
    total = 0
    for v in range(g.n):
        above = -1 << (v + 1)
        nv = adj[v]
        for x1 in iter_bits(nv & above):
            n1 = adj[x1]
            for x2 in iter_bits(n1 & above):
                if induced and nv >> x2 & 1:
                    continue
                m3 = adj[x2] & nv & above & ~(1 << x1)
                if induced:
                    m3 &= ~n1
                total += m3.bit_count()
    return _checked(total // 2)


def iter_induced_c5(g: Graph) -> Iterator[VertexSet]:
    """Each induced 5-cycle once, as a vertex bitmask."""
    adj = g.adj
    for v in range(g.n):
        above = -1 << (v + 1)
        nv = adj[v]
        for x1 in iter_bits(nv & above):
            n1 = adj[x1]
            for x2 in iter_bits(n1 & above & ~nv):
                n2 = adj[x2]
                for x3 in iter_bits(n2 & above & ~nv & ~n1 & ~(1 << x1)):
                    # x4 > x1 keeps one of the two walking directions
                    m4 = adj[x3] & nv & ~n1 & ~n2 & (-1 << (x1 + 1))
                    base = 1 << v | 1 << x1 | 1 << x2 | 1 << x3
                    for x4 in iter_bits(m4):
                        yield base | 1 << x4


def vertex_c5_load(g: Graph, v: int) -> int:
    """Number of induced C5's through v."""
    check_vertex(g, v)
    adj = g.adj
    nv = adj[v]
    bv = 1 << v
    total = 0
    for x1 in iter_bits(nv):
        b1 = 1 << x1
        n1 = adj[x1]
        for x2 in iter_bits(n1 & ~nv & ~bv):
            n2 = adj[x2]
            for x3 in iter_bits(n2 & ~nv & ~n1 & ~bv & ~b1):
                total += (adj[x3] & nv & ~n1 & ~n2 & ~b1).bit_count()
    return _checked(total // 2)


def vertex_c5_loads(g: Graph) -> list[int]:
    loads = [0] * g.n
    for mask in iter_induced_c5(g):
        for v in iter_bits(mask):
            loads[v] += 1
    return loads


def triple_c5_count(g: Graph, u: int, v: int, w: int, cycles: list[VertexSet] | None = None) -> int:
    """Induced C5's containing all of u, v, w. `cycles` may carry a precomputed census."""
    for x in (u, v, w):
        check_vertex(g, x)
    if len({u, v, w}) != 3:
        raise GraphError("triple_c5_count needs three distinct vertices")
    need = 1 << u | 1 << v | 1 << w
    pool = cycles if cycles is not None else iter_induced_c5(g)
    return sum(1 for mask in pool if mask & need == need)


class CountReport(BaseModel):
    induced_c5: int
    c5_total: int
    induced_c4: int
    c4_total: int
    vertex_c5_load: list[int]


def census(g: Graph) -> CountReport:
    return CountReport(
        induced_c5=count_c5(g, induced=True),
        c5_total=count_c5(g),
        induced_c4=count_c4(g, induced=True),
        c4_total=count_c4(g),
        vertex_c5_load=vertex_c5_loads(g),
    )
