from planarc5.constructions.families import (
    ConstructionSpec,
    Family,
    apex_tripartite,
    build,
    expected_count,
    k2_book,
)

__all__ = ["ConstructionSpec", "Family", "apex_tripartite", "build", "expected_count", "k2_book"]
