from itertools import combinations

import pytest

from planarc5.constructions.families import apex_tripartite
from planarc5.errors import DisconnectedError, GraphError, NonPlanarError, NotACycleError
from planarc5.graphs.base import Graph, from_edges, induced_subgraph, iter_bits, random_graph
from planarc5.graphs.canon import canonical_key
from planarc5.planarity.embedding import (
    cycle_sides,
    embed,
    export_rotation,
    faces,
    is_planar,
    parse_rotation,
)

from conftest import complete, complete_bipartite, cycle


def _contract(g: Graph, a: int, b: int) -> Graph:
    keep = [v for v in range(g.n) if v != b]
    pos = {v: i for i, v in enumerate(keep)}
    edges = set()
    for x, y in g.edges():
        x, y = (a if x == b else x), (a if y == b else y)
        if x != y:
            edges.add((min(pos[x], pos[y]), max(pos[x], pos[y])))
    return from_edges(len(keep), edges)


def _contains_k33(g: Graph) -> bool:
    return any(
        all(g.has_edge(i, j) for i in side for j in range(6) if j not in side)
        for side in combinations(range(6), 3)
    )


def _has_kuratowski_minor(g: Graph, memo: dict) -> bool:
    """K5 or K3,3 minor, by vertex deletion and edge contraction down to 5 or 6 vertices."""
    key = canonical_key(g)
    if key in memo:
        return memo[key]
    if g.n < 5:
        found = False
    elif g.n == 5 and g.m == 10:
        found = True
    elif g.n == 6 and _contains_k33(g):
        found = True
    else:
        smaller = [induced_subgraph(g, g.full & ~(1 << v)) for v in range(g.n)]
        smaller += [_contract(g, a, b) for a, b in g.edges()]
        found = any(_has_kuratowski_minor(h, memo) for h in smaller)
    memo[key] = found
    return found


def _all_graphs(n: int) -> list[Graph]:
    """One graph per isomorphism class on n vertices, grown by adding a vertex with every neighbourhood."""
    level = {"@": from_edges(1, [])}
    for size in range(1, n):
        grown: dict[str, Graph] = {}
        for g in level.values():
            for nbrs in range(1 << size):
                child = from_edges(size + 1, g.edges() + [(v, size) for v in iter_bits(nbrs)])
                grown.setdefault(canonical_key(child), child)
        level = grown
    return list(level.values())


@pytest.mark.parametrize(
    "n, classes",
    [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156), pytest.param(7, 1044, marks=pytest.mark.slow)],
)
def test_planarity_agrees_with_minor_search_on_every_graph(n, classes):
    graphs = _all_graphs(n)
    assert len(graphs) == classes
    memo: dict = {}
    for g in graphs:
        assert is_planar(g) == (not _has_kuratowski_minor(g, memo)), g.edges()


def test_kuratowski_graphs(k5, k33, k4):
    assert not is_planar(k5)
    assert not is_planar(k33)
    assert is_planar(k4)
    with pytest.raises(NonPlanarError):
        embed(k5)


def test_disconnected_and_empty_graphs_do_not_embed():
    with pytest.raises(DisconnectedError):
        embed(from_edges(4, [(0, 1), (2, 3)]))
    with pytest.raises(DisconnectedError):
        embed(Graph(0, ()))


@pytest.mark.parametrize(
    "graph, face_count",
    [(complete(4), 4), (complete_bipartite(2, 5), 5), (cycle(5), 2), (Graph(1, (0,)), 1)],
)
def test_face_counts_and_euler(graph, face_count):
    e = embed(graph)
    assert len(faces(e)) == face_count
    assert graph.n - graph.m + len(e.face_set) == 2


def test_every_dart_lies_on_exactly_one_face(rng):
    for _ in range(20):
        g = random_graph(9, 0.35, rng)
        if not (g.is_connected() and is_planar(g)):
            continue
        e = embed(g)
        darts = [d for face in e.face_set.faces for d in face]
        assert len(darts) == len(set(darts)) == 2 * g.m


def test_outer_face_defaults_to_longest_and_can_be_chosen():
    g = from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    e = embed(g)
    assert e.face_set.lengths()[e.outer_face] == max(e.face_set.lengths())
    assert embed(g, outer_face=0).outer_face == 0
    with pytest.raises(GraphError):
        embed(g, outer_face=9)


def test_cycle_sides_partitions_and_separates():
    g = apex_tripartite(13)
    e = embed(g)
    a1, a3 = 4, 6
    cyc = (0, a1, 1, a3)
    inside, outside = cycle_sides(e, cyc)
    on_cycle = sum(1 << v for v in cyc)
    assert inside & outside == 0
    assert inside | outside | on_cycle == g.full
    for x, y in g.edges():
        assert not ((inside >> x & 1) and (outside >> y & 1))
        assert not ((outside >> x & 1) and (inside >> y & 1))


def test_cycle_sides_on_triangle_with_pendant_inside_or_out():
    g = from_edges(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
    inside, outside = cycle_sides(embed(g), (0, 1, 2))
    assert inside | outside == 0b1000


def test_cycle_sides_rejects_non_cycles():
    e = embed(cycle(5))
    with pytest.raises(NotACycleError):
        cycle_sides(e, (0, 1, 3))
    with pytest.raises(NotACycleError):
        cycle_sides(e, (0, 1))
    with pytest.raises(NotACycleError):
        cycle_sides(e, (0, 1, 1))


def test_rotation_export_format():
    e = embed(complete(4))
    text = export_rotation(e)
    lines = text.splitlines()
    assert len(lines) == 4
    assert all(line.startswith(f"{v}: ") for v, line in enumerate(lines))
    assert parse_rotation(text) == e.rotation
    with pytest.raises(GraphError):
        parse_rotation("1: 0\n")
