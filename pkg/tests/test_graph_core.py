import networkx as nx
import numpy as np
import pytest

import planarc5.graphs.base as base
from planarc5.config import Settings
from planarc5.constructions.families import apex_tripartite
from planarc5.errors import GraphError
from planarc5.graphs.base import (
    Graph,
    common_neighbors,
    connected_within,
    from_edges,
    induced_subgraph,
    is_simple,
    iter_bits,
    members,
    random_graph,
    vertex_set,
)

from conftest import complete, cycle


def test_bitset_helpers():
    assert list(iter_bits(0b101001)) == [0, 3, 5]
    assert vertex_set([5, 0, 3]) == 0b101001
    assert members(0) == []


def test_from_edges_is_symmetric_and_collapses_duplicates():
    g = from_edges(4, [(0, 1), (1, 0), (1, 2), (2, 3)])
    assert is_simple(g)
    assert g.m == 3
    assert g.has_edge(1, 0) and g.has_edge(0, 1)
    assert g.degree(1) == 2
    assert g.neighbors(1) == [0, 2]
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 4)], [(-1, 2)]])
def test_from_edges_rejects_loops_and_bad_endpoints(edges):
    with pytest.raises(GraphError):
        from_edges(4, edges)


def test_is_simple_catches_asymmetric_rows():
    assert not is_simple(Graph(2, (0b10, 0b00)))
    assert not is_simple(Graph(2, (0b01, 0b00)))


def test_connectivity():
    g = from_edges(5, [(0, 1), (1, 2), (3, 4)])
    assert not g.is_connected()
    assert connected_within(g, 0b00111)
    assert not connected_within(g, 0b00101)
    assert not connected_within(g, 0)
    assert cycle(6).is_connected()
    assert not Graph(0, ()).is_connected()


def test_common_neighbors():
    g = complete(4)
    assert common_neighbors(g, 0, 1) == 0b1100
    with pytest.raises(GraphError):
        common_neighbors(g, 2, 2)
    with pytest.raises(GraphError):
        common_neighbors(g, 0, 9)


def test_induced_subgraph_relabels_in_order():
    h = induced_subgraph(cycle(5), 0b10011)    # vertices 0, 1, 4
    assert h.n == 3
    assert h.edges() == [(0, 1), (0, 2)]
    with pytest.raises(GraphError):
        induced_subgraph(cycle(5), 1 << 7)


def test_induced_subgraph_keeps_exactly_the_edges_inside(rng):
    for _ in range(300):
        n = int(rng.integers(1, 13))
        g = random_graph(n, float(rng.uniform(0.1, 0.9)), rng)
        s = int(rng.integers(0, 1 << n))
        h = induced_subgraph(g, s)
        order = members(s)
        assert h.n == len(order)
        for i in range(h.n):
            for j in range(h.n):
                assert h.has_edge(i, j) == (i != j and g.has_edge(order[i], order[j]))


def test_apex_hub_triangle_is_induced():
    h = induced_subgraph(apex_tripartite(7), vertex_set([1, 2, 3]))
    assert h == cycle(3)


def test_random_graph_is_seeded_and_simple():
    a = random_graph(12, 0.4, np.random.default_rng(7))
    b = random_graph(12, 0.4, np.random.default_rng(7))
    assert a == b
    assert is_simple(a)
    assert random_graph(6, 0.0, np.random.default_rng(1)).m == 0
    assert random_graph(6, 1.0, np.random.default_rng(1)).m == 15


def test_networkx_bridge_round_trip():
    g = cycle(7)
    assert Graph.from_networkx(g.to_networkx()) == g
    relabelled = Graph.from_networkx(nx.relabel_nodes(nx.path_graph(3), {0: "a", 1: "b", 2: "c"}))
    assert relabelled.edges() == [(0, 1), (1, 2)]


def test_vertex_cap(monkeypatch):
    monkeypatch.setattr(base, "get_settings", lambda: Settings(max_vertices=4))
    from_edges(4, [])
    with pytest.raises(GraphError):
        from_edges(5, [])
