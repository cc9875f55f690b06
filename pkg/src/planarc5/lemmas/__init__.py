from planarc5.lemmas.basic_bound import (
    LemmaOneReport,
    SweepResult,
    basic_bound,
    cross_forest_check,
    lemma_one_sweep,
)
from planarc5.lemmas.regions import (
    EmptyK2kWitness,
    find_empty_k2k,
    gap_profile,
    max_common_neighbors,
    min_vertex_load,
    natural_order,
)

__all__ = [
    "EmptyK2kWitness",
    "LemmaOneReport",
    "SweepResult",
    "basic_bound",
    "cross_forest_check",
    "find_empty_k2k",
    "gap_profile",
    "lemma_one_sweep",
    "max_common_neighbors",
    "min_vertex_load",
    "natural_order",
]
