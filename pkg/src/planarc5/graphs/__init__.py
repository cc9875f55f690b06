from planarc5.graphs.base import (
    Graph,
    VertexSet,
    common_neighbors,
    from_edges,
    induced_subgraph,
    iter_bits,
    members,
    random_graph,
    vertex_set,
)
from planarc5.graphs.graph6 import graph6_decode, graph6_encode, read_graph6

__all__ = [
    "Graph",
    "VertexSet",
    "common_neighbors",
    "from_edges",
    "graph6_decode",
    "graph6_encode",
    "induced_subgraph",
    "iter_bits",
    "members",
    "random_graph",
    "read_graph6",
    "vertex_set",
]
