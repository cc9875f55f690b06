import numpy as np
import pytest

import planarc5.graphs.graph6 as graph6
from planarc5.config import Settings
from planarc5.errors import Graph6Error
from planarc5.graphs.base import Graph, from_edges, random_graph
from planarc5.graphs.graph6 import graph6_decode, graph6_encode, read_graph6

from conftest import complete, cycle


@pytest.mark.parametrize(
    "graph, text",
    [
        (Graph(0, ()), "?"),
        (Graph(1, (0,)), "@"),
        (cycle(3), "Bw"),
        (complete(4), "C~"),
        (cycle(5), "Dhc"),
    ],
)
def test_known_encodings(graph, text):
    assert graph6_encode(graph) == text
    assert graph6_decode(text) == graph


def test_long_size_prefix():
    g = from_edges(63, [(0, 62)])
    text = graph6_encode(g)
    assert text.startswith("~??~")
    assert graph6_decode(text) == g


def test_random_graph_survives_encoding():
    g = random_graph(70, 0.1, np.random.default_rng(3))
    assert graph6_decode(graph6_encode(g)) == g


@pytest.mark.parametrize("n", range(1, 21))
def test_random_graphs_round_trip(n):
    rng = np.random.default_rng(n)
    for _ in range(1000):
        g = random_graph(n, float(rng.uniform(0.0, 1.0)), rng)
        assert graph6_decode(graph6_encode(g)) == g


def test_header_is_ignored():
    assert graph6_decode(">>graph6<<Bw") == cycle(3)


@pytest.mark.parametrize("text", ["", "B", "Bww", "B w", "Bé", "~?"])
def test_malformed_lines_raise(text):
    with pytest.raises(Graph6Error):
        graph6_decode(text)


def test_declared_size_above_cap(monkeypatch):
    monkeypatch.setattr(graph6, "get_settings", lambda: Settings(max_vertices=3))
    graph6_decode("Bw")
    with pytest.raises(Graph6Error):
        graph6_decode("C~")


def test_read_graph6_reports_bad_lines_in_place():
    lines = [">>graph6<<Bw\n", "\n", "not graph6\n", "C~\n"]
    items = list(read_graph6(lines))
    assert [line for line, _ in items] == [1, 3, 4]
    assert items[0][1] == cycle(3)
    assert isinstance(items[1][1], Graph6Error)
    assert items[2][1] == complete(4)
