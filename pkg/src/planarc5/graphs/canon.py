# src/planarc5/graphs/canon.py
"""
Canonical labelling for small graphs: colour refinement plus backtracking
over individualised vertices. Good enough for the n <= 10 enumeration; there
is no automorphism-group bookkeeping beyond skipping twin vertices.
"""
from __future__ import annotations

from planarc5.graphs.base import Graph, iter_bits
from planarc5.graphs.graph6 import graph6_encode


def _refine(g: Graph, colors: list[int]) -> list[int]:
    # colours are renumbered by sorted signature, so the result depends only
    # on the structure of g and the starting partition, never on labels
    count = len(set(colors))
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in iter_bits(g.adj[v]))))
            for v in range(g.n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [rank[s] for s in sigs]
        if len(rank) == count:
            return colors
        count = len(rank)


def _twins(g: Graph, x: int, y: int) -> bool:
    # swapping x and y is an automorphism
    return g.adj[x] & ~(1 << y) == g.adj[y] & ~(1 << x)


def _certificate(g: Graph, order: list[int]) -> tuple[int, ...]:
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        row = 0
        for u in iter_bits(g.adj[v]):
            row |= 1 << pos[u]
        rows.append(row)
    return tuple(rows)


def canonical_labeling(g: Graph, individualize: int | None = None) -> tuple[Graph, list[int]]:
    """
    Return (canonical form, order) where order[i] is the vertex of g placed at
    position i. With `individualize`, that vertex starts in a cell of its own,
    which yields the canonical form of the rooted graph (g, v).
    """
    if g.n == 0:
        return g, []
    colors = [0] * g.n
    if individualize is not None:
        colors = [1] * g.n
        colors[individualize] = 0
    best: list = [None, None]

    def descend(colors: list[int]) -> None:
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        if len(cells) == g.n:
            order = sorted(range(g.n), key=colors.__getitem__)
            cert = _certificate(g, order)
            if best[0] is None or cert > best[0]:
                best[0], best[1] = cert, order
            return
        target = min((len(vs), c) for c, vs in cells.items() if len(vs) > 1)[1]
        tried: list[int] = []
        for x in cells[target]:
            if any(_twins(g, x, y) for y in tried):
                continue
            tried.append(x)
            child = [2 * c + 1 for c in colors]
            child[x] = 2 * colors[x]
            descend(_refine(g, child))

    descend(_refine(g, colors))
    return Graph(g.n, best[0]), best[1]


def canonical_form(g: Graph) -> Graph:
    return canonical_labeling(g)[0]


def canonical_key(g: Graph) -> str:
    return graph6_encode(canonical_form(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    return canonical_form(g) == canonical_form(h)


def same_orbit(g: Graph, a: int, b: int) -> bool:
    """True when some automorphism of g maps a to b."""
    if a == b:
        return True
    if g.degree(a) != g.degree(b):
        return False
    return canonical_labeling(g, a)[0] == canonical_labeling(g, b)[0]
