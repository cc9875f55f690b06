"""Induced C4/C5 counting, constructions, lemma checks and exhaustive scans for planar graphs."""
from planarc5.constructions import apex_tripartite, k2_book
from planarc5.counting import CountReport, census, count_c4, count_c5
from planarc5.graphs import Graph, from_edges, graph6_decode, graph6_encode
from planarc5.planarity import embed, is_planar

__version__ = "0.1.0"

__all__ = [
    "CountReport",
    "Graph",
    "apex_tripartite",
    "census",
    "count_c4",
    "count_c5",
    "embed",
    "from_edges",
    "graph6_decode",
    "graph6_encode",
    "is_planar",
    "k2_book",
]
