from planarc5.planarity.embedding import (
    FaceSet,
    PlaneEmbedding,
    cycle_sides,
    embed,
    export_rotation,
    faces,
    is_planar,
)

__all__ = ["FaceSet", "PlaneEmbedding", "cycle_sides", "embed", "export_rotation", "faces", "is_planar"]
