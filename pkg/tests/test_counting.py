import numpy as np
import pytest

from planarc5.constructions.families import apex_classes, apex_tripartite, k2_book
from planarc5.counting.cycles import (
    census,
    count_c4,
    count_c5,
    iter_induced_c5,
    triple_c5_count,
    vertex_c5_load,
    vertex_c5_loads,
)
from planarc5.counting.oracle import count_induced_pattern_oracle, count_pattern_oracle
from planarc5.errors import CountOverflowError, GraphError, PatternTooLargeError
from planarc5.graphs.base import Graph, random_graph
import planarc5.counting.cycles as cycles

from conftest import complete, cycle

C4 = cycle(4)
C5 = cycle(5)


def _oracle_mismatches(g: Graph) -> list[str]:
    bad = []
    if count_c5(g, induced=True) != count_induced_pattern_oracle(g, C5):
        bad.append("induced_c5")
    if count_c5(g) != count_pattern_oracle(g, C5):
        bad.append("c5")
    if count_c4(g, induced=True) != count_induced_pattern_oracle(g, C4):
        bad.append("induced_c4")
    if count_c4(g) != count_pattern_oracle(g, C4):
        bad.append("c4")
    return bad


@pytest.mark.parametrize(
    "graph, induced_c5, c5, induced_c4, c4",
    [
        (cycle(5), 1, 1, 0, 0),
        (cycle(4), 0, 0, 1, 1),
        (complete(4), 0, 0, 0, 3),
        (complete(5), 0, 12, 0, 15),
        (Graph(0, ()), 0, 0, 0, 0),
    ],
)
def test_small_counts(graph, induced_c5, c5, induced_c4, c4):
    assert count_c5(graph, induced=True) == induced_c5
    assert count_c5(graph) == c5
    assert count_c4(graph, induced=True) == induced_c4
    assert count_c4(graph) == c4


def test_counters_match_oracle_on_a_sample(rng):
    for _ in range(300):
        g = random_graph(int(rng.integers(0, 11)), float(rng.uniform(0.1, 0.9)), rng)
        assert _oracle_mismatches(g) == []


@pytest.mark.slow
def test_counters_match_oracle_on_ten_thousand_graphs():
    rng = np.random.default_rng(10_000)
    mismatches = 0
    for _ in range(10_000):
        g = random_graph(int(rng.integers(0, 11)), float(rng.uniform(0.05, 0.95)), rng)
        mismatches += len(_oracle_mismatches(g))
        assert sum(vertex_c5_loads(g)) == 5 * count_c5(g, induced=True)
    assert mismatches == 0


def test_load_identity_and_single_vertex_loads(rng):
    for _ in range(100):
        g = random_graph(int(rng.integers(1, 11)), float(rng.uniform(0.2, 0.8)), rng)
        loads = vertex_c5_loads(g)
        assert sum(loads) == 5 * count_c5(g, induced=True)
        assert loads == [vertex_c5_load(g, v) for v in range(g.n)]


def test_iter_induced_c5_yields_each_cycle_once(rng):
    g = random_graph(9, 0.4, rng)
    masks = list(iter_induced_c5(g))
    assert len(masks) == len(set(masks)) == count_c5(g, induced=True)
    assert all(mask.bit_count() == 5 for mask in masks)


def test_apex_tripartite_loads():
    g = apex_tripartite(13)
    a, b, c = apex_classes(13)
    loads = vertex_c5_loads(g)
    assert loads[0] == 27
    assert loads[1] == 18
    assert all(loads[x] == 6 for x in (*a, *b, *c))
    assert triple_c5_count(g, 1, a[0], 0) == 6


def test_triple_count_needs_distinct_vertices():
    with pytest.raises(GraphError):
        triple_c5_count(C5, 0, 0, 1)
    with pytest.raises(GraphError):
        vertex_c5_load(C5, 5)


def test_census_of_k2_book():
    report = census(k2_book(6))
    assert report.induced_c4 == 6
    assert report.induced_c5 == 0
    assert report.vertex_c5_load == [0] * 6
    assert set(report.model_dump()) == {"induced_c5", "c5_total", "induced_c4", "c4_total", "vertex_c5_load"}


def test_oracle_rejects_large_patterns():
    with pytest.raises(PatternTooLargeError):
        count_induced_pattern_oracle(C5, cycle(6))


def test_overflow_is_an_error(monkeypatch):
    monkeypatch.setattr(cycles, "INT64_MAX", 0)
    with pytest.raises(CountOverflowError):
        count_c5(C5)
