# src/planarc5/constructions/families.py
from __future__ import annotations

from enum import Enum
from typing import Callable

from pydantic import BaseModel

from planarc5.errors import ConstructionError
from planarc5.graphs.base import Graph, from_edges


class Family(str, Enum):
    APEX_TRIPARTITE = "apex_tripartite"
    K2_BOOK = "k2_book"


class ConstructionSpec(BaseModel):
    family: Family
    n: int
    expected_count: int
    objective: str          # "induced_c5" or "induced_c4"


def apex_tripartite(n: int) -> Graph:
    """
    Triangle v1 v2 v3, classes A, B, C of size (n-4)/3 hanging off v1, v2, v3,
    and an apex u joined to every class vertex.

    Labels: 0 = u, 1..3 = v1..v3, then A, B, C in consecutive blocks.
    """
    if n < 7:
        raise ConstructionError(f"apex_tripartite needs n >= 7, got {n}")
    if (n - 4) % 3:
        raise ConstructionError(f"apex_tripartite needs 3 | (n - 4), got n = {n}")
    k = (n - 4) // 3
    edges = [(1, 2), (2, 3), (3, 1)]
    for cls in range(3):
        hub = cls + 1
        for x in range(4 + cls * k, 4 + (cls + 1) * k):
            edges += [(hub, x), (x, 0)]
    return from_edges(n, edges)


def apex_classes(n: int) -> tuple[range, range, range]:
    k = (n - 4) // 3
    return range(4, 4 + k), range(4 + k, 4 + 2 * k), range(4 + 2 * k, n)


def k2_book(n: int) -> Graph:
    """K_{2,n-2}: hubs 0 and 1, every other vertex adjacent to both."""
    if n < 4:
        raise ConstructionError(f"k2_book needs n >= 4, got {n}")
    return from_edges(n, [(hub, x) for x in range(2, n) for hub in (0, 1)])


def expected_count(family: Family, n: int) -> int:
    if family is Family.APEX_TRIPARTITE:
        return (n - 4) ** 2 // 3
    return (n * n - 5 * n + 6) // 2


_BUILDERS: dict[Family, tuple[Callable[[int], Graph], str]] = {
    Family.APEX_TRIPARTITE: (apex_tripartite, "induced_c5"),
    Family.K2_BOOK: (k2_book, "induced_c4"),
}


def build(family: Family | str, n: int) -> tuple[Graph, ConstructionSpec]:
    try:
        family = Family(family)
    except ValueError:
        raise ConstructionError(f"unknown family {family!r}") from None
    builder, objective = _BUILDERS[family]
    g = builder(n)
    return g, ConstructionSpec(
        family=family, n=n, expected_count=expected_count(family, n), objective=objective
    )
