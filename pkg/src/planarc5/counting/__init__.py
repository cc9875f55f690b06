from planarc5.counting.cycles import (
    CountReport,
    census,
    count_c4,
    count_c5,
    iter_induced_c5,
    triple_c5_count,
    vertex_c5_load,
    vertex_c5_loads,
)
from planarc5.counting.oracle import count_induced_pattern_oracle, count_pattern_oracle

__all__ = [
    "CountReport",
    "census",
    "count_c4",
    "count_c5",
    "count_induced_pattern_oracle",
    "count_pattern_oracle",
    "iter_induced_c5",
    "triple_c5_count",
    "vertex_c5_load",
    "vertex_c5_loads",
]
