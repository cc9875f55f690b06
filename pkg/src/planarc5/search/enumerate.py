# src/planarc5/search/enumerate.py
"""
Isomorph-free generation of connected planar graphs by canonical augmentation.

A graph on n vertices is produced from a parent on n-1 vertices by adding one
vertex v with a non-empty neighbour set. The child is kept only when v lies
in the automorphism orbit of the canonically chosen removable vertex (the
non-cut vertex that comes last in the canonical order), and isomorphic
siblings from the same parent are dropped. Every connected planar graph has a
non-cut vertex and planarity is hereditary, so each isomorphism class is
produced exactly once, from exactly one parent.
"""
from __future__ import annotations

import logging
from multiprocessing.pool import Pool
from typing import Callable, Iterable, Iterator

from planarc5.config import get_settings
from planarc5.errors import SearchLimitError
from planarc5.graphs.base import Graph, connected_within
from planarc5.graphs.canon import canonical_labeling, same_orbit
from planarc5.graphs.graph6 import graph6_encode
from planarc5.planarity.embedding import is_planar

logger = logging.getLogger(__name__)

SINGLE_VERTEX = Graph(1, (0,))


def check_limit(n: int, limit: int | None = None) -> None:
    limit = get_settings().scan_limit if limit is None else limit
    if not 1 <= n <= limit:
        raise SearchLimitError(f"n = {n} outside 1..{limit}")


def _extend(parent: Graph, nbrs: int) -> Graph:
    v = parent.n
    rows = [row | (1 << v) if nbrs >> i & 1 else row for i, row in enumerate(parent.adj)]
    rows.append(nbrs)
    return Graph(v + 1, tuple(rows))


def _canonical_child(child: Graph) -> Graph | None:
    """The child's canonical form if the new (last) vertex is the canonical deletion, else None."""
    canon, order = canonical_labeling(child)
    full = child.full
    last = child.n - 1
    for w in reversed(order):
        if connected_within(child, full & ~(1 << w)):
            break
    if w == last or same_orbit(child, w, last):
        return canon
    return None


def children(parent: Graph) -> Iterator[Graph]:
    """Canonical children of one parent, as canonical forms, each class once."""
    n = parent.n + 1
    edge_cap = 3 * n - 6 if n >= 3 else n * (n - 1) // 2
    base_m = parent.m
    seen: set[Graph] = set()
    for nbrs in range(1, 1 << parent.n):
        if base_m + nbrs.bit_count() > edge_cap:
            continue
        canon = _canonical_child(_extend(parent, nbrs))
        if canon is None or canon in seen:
            continue
        seen.add(canon)
        if is_planar(canon):
            yield canon


def _children_list(parent: Graph) -> list[Graph]:
    return list(children(parent))


def next_level(parents: Iterable[Graph], pool: Pool | None = None) -> list[Graph]:
    if pool is None:
        level = [c for p in parents for c in children(p)]
    else:
        level = [c for batch in pool.imap(_children_list, parents, chunksize=8) for c in batch]
    level.sort(key=graph6_encode)
    return level


def planar_levels(top: int, pool: Pool | None = None) -> list[Graph]:
    """All connected planar graphs on `top` vertices, canonical and sorted by graph6."""
    level = [SINGLE_VERTEX]
    for k in range(2, top + 1):
        level = next_level(level, pool)
        logger.info("level %d: %d connected planar graphs", k, len(level))
    return level


def enumerate_planar(n: int, visitor: Callable[[Graph], None], limit: int | None = None) -> int:
    """Call `visitor` once per connected planar graph on n vertices (up to isomorphism)."""
    check_limit(n, limit)
    if n == 1:
        visitor(SINGLE_VERTEX)
        return 1
    visited = 0
    for parent in planar_levels(n - 1):
        for child in children(parent):
            visitor(child)
            visited += 1
    return visited
