# src/planarc5/planarity/embedding.py
from __future__ import annotations

import logging
from dataclasses import dataclass, field

import networkx as nx

from planarc5.errors import DisconnectedError, GraphError, NonPlanarError, NotACycleError
from planarc5.graphs.base import Graph, VertexSet, check_vertex, vertex_set

logger = logging.getLogger(__name__)

Dart = tuple[int, int]


@dataclass(frozen=True)
class FaceSet:
    faces: tuple[tuple[Dart, ...], ...]
    face_of: dict[Dart, int] = field(repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.faces)

    def lengths(self) -> list[int]:
        return [len(f) for f in self.faces]

    def vertices(self, i: int) -> list[int]:
        return [a for a, _ in self.faces[i]]


@dataclass(frozen=True)
class PlaneEmbedding:
    base: Graph
    rotation: tuple[tuple[int, ...], ...]   # clockwise neighbour order per vertex
    outer_face: int
    face_set: FaceSet = field(repr=False, compare=False)

    def face_of(self, a: int, b: int) -> int:
        return self.face_set.face_of[(a, b)]


def is_planar(g: Graph) -> bool:
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return False
    ok, _ = nx.check_planarity(g.to_networkx())
    return ok


def _trace_faces(rotation: tuple[tuple[int, ...], ...]) -> FaceSet:
    # successor of dart (a, b) is (b, c) with c the clockwise successor of a around b
    pos = [{v: i for i, v in enumerate(rot)} for rot in rotation]
    face_of: dict[Dart, int] = {}
    faces: list[tuple[Dart, ...]] = []
    for a, rot in enumerate(rotation):
        for b in rot:
            if (a, b) in face_of:
                continue
            walk = []
            dart = (a, b)
            while dart not in face_of:
                face_of[dart] = len(faces)
                walk.append(dart)
                x, y = dart
                around = rotation[y]
                dart = (y, around[(pos[y][x] + 1) % len(around)])
            faces.append(tuple(walk))
    if not faces:
        faces.append(())    # edgeless single vertex: one face, no darts
    return FaceSet(tuple(faces), face_of)


def embed(g: Graph, outer_face: int | None = None) -> PlaneEmbedding:
    """
    Rotation system for a connected planar graph. The outer face defaults to
    the longest face (first one on ties) and can be overridden by index.
    """
    if not g.is_connected():
        raise DisconnectedError(f"embed needs a connected graph (n={g.n})")
    ok, emb = nx.check_planarity(g.to_networkx())
    if not ok:
        raise NonPlanarError("graph has no plane embedding")
    rotation = tuple(
        tuple(emb.neighbors_cw_order(v)) if g.adj[v] else () for v in range(g.n)
    )
    face_set = _trace_faces(rotation)
    if outer_face is None:
        lengths = face_set.lengths()
        outer_face = lengths.index(max(lengths))
    elif not 0 <= outer_face < len(face_set):
        raise GraphError(f"outer face {outer_face} outside 0..{len(face_set) - 1}")
    logger.debug("embedded n=%d m=%d into %d faces", g.n, g.m, len(face_set))
    return PlaneEmbedding(g, rotation, outer_face, face_set)


def faces(e: PlaneEmbedding) -> FaceSet:
    return e.face_set


def _check_cycle(g: Graph, cycle: list[int] | tuple[int, ...]) -> set[frozenset[int]]:
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        raise NotACycleError(f"{list(cycle)} is not a sequence of >= 3 distinct vertices")
    for v in cycle:
        check_vertex(g, v)
    edges = set()
    for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
        if not g.has_edge(a, b):
            raise NotACycleError(f"{a}-{b} is not an edge")
        edges.add(frozenset((a, b)))
    return edges


def face_components(e: PlaneEmbedding, cycle: list[int] | tuple[int, ...]) -> list[int]:
    """
    Label faces by the side of `cycle` they lie on: faces are merged across
    every edge that is not a cycle edge (the dual graph cut along the cycle).
    """
    cut = _check_cycle(e.base, cycle)
    parent = list(range(len(e.face_set)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for a, b in e.base.edges():
        if frozenset((a, b)) in cut:
            continue
        ra, rb = find(e.face_of(a, b)), find(e.face_of(b, a))
        if ra != rb:
            parent[ra] = rb
    return [find(i) for i in range(len(parent))]


def cycle_sides(e: PlaneEmbedding, cycle: list[int] | tuple[int, ...]) -> tuple[VertexSet, VertexSet]:
    """(inside, outside) of the vertices off the cycle; outside holds the outer face."""
    label = face_components(e, cycle)
    outer = label[e.outer_face]
    on_cycle = vertex_set(cycle)
    inside = outside = 0
    for v in range(e.base.n):
        if on_cycle >> v & 1:
            continue
        side = label[e.face_of(v, e.rotation[v][0])]
        if side == outer:
            outside |= 1 << v
        else:
            inside |= 1 << v
    return inside, outside


def export_rotation(e: PlaneEmbedding) -> str:
    """One line per vertex, `v: n1 n2 ... nk`, neighbours in clockwise order."""
    return "\n".join(
        f"{v}: {' '.join(map(str, rot))}".rstrip() for v, rot in enumerate(e.rotation)
    )


def parse_rotation(text: str) -> tuple[tuple[int, ...], ...]:
    rows: dict[int, tuple[int, ...]] = {}
    for line in text.splitlines():
        if not line.strip():
            continue
        head, _, tail = line.partition(":")
        rows[int(head)] = tuple(int(t) for t in tail.split())
    if sorted(rows) != list(range(len(rows))):
        raise GraphError("rotation text must list vertices 0..n-1")
    return tuple(rows[v] for v in range(len(rows)))
