# src/planarc5/counting/oracle.py
"""
Independent subset-scan counters: every k-subset of the host is compared with
every labelled placement of the pattern. Slow by design; used to cross-check
the bitset counters.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

from planarc5.errors import PatternTooLargeError
from planarc5.graphs.base import Graph

MAX_PATTERN = 5


def _pairs(k: int) -> list[tuple[int, int]]:
    return list(combinations(range(k), 2))


@lru_cache(maxsize=None)
def _placements(pattern: Graph) -> frozenset[int]:
    """Edge masks (over the k-choose-2 pair slots) of all labelled copies of the pattern."""
    k = pattern.n
    slot = {pair: i for i, pair in enumerate(_pairs(k))}
    found = set()
    for perm in permutations(range(k)):
        mask = 0
        for a, b in pattern.edges():
            x, y = sorted((perm[a], perm[b]))
            mask |= 1 << slot[(x, y)]
        found.add(mask)
    return frozenset(found)


def _subset_masks(g: Graph, k: int):
    pairs = _pairs(k)
    for subset in combinations(range(g.n), k):
        mask = 0
        for i, (a, b) in enumerate(pairs):
            if g.adj[subset[a]] >> subset[b] & 1:
                mask |= 1 << i
        yield mask


def _check(pattern: Graph) -> None:
    if pattern.n > MAX_PATTERN:
        raise PatternTooLargeError(f"pattern has {pattern.n} vertices, oracle handles <= {MAX_PATTERN}")


def count_induced_pattern_oracle(g: Graph, pattern: Graph) -> int:
    """Vertex subsets whose induced subgraph is isomorphic to `pattern`."""
    _check(pattern)
    placements = _placements(pattern)
    return sum(1 for mask in _subset_masks(g, pattern.n) if mask in placements)


def count_pattern_oracle(g: Graph, pattern: Graph) -> int:
    """Copies of `pattern` as a (not necessarily induced) subgraph."""
    _check(pattern)
    placements = _placements(pattern)
    return sum(
        sum(1 for p in placements if p & mask == p)
        for mask in _subset_masks(g, pattern.n)
    )
