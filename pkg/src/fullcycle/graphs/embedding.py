"""Rotation-system embeddings, face tracing and the fullerene graph type.

Orientation convention: every rotation list is the clockwise order of the
neighbors around its vertex. Faces are traced by entering a vertex along a
dart and leaving along the neighbor that precedes the entry vertex in the
clockwise list (a counterclockwise turn).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from ..exceptions import EmbeddingError

Rotation = Tuple[Tuple[int, ...], ...]
Edge = Tuple[int, int]
Dart = Tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Face:
    id: int
    boundary: Tuple[int, ...]
    neighbors: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.boundary)

    def vertex(self, i: int) -> int:
        """Boundary vertex with cyclic indexing."""
        return self.boundary[i % len(self.boundary)]

    def edge(self, i: int) -> Edge:
        """The boundary edge v_i v_{i+1} (indices modulo the face size)."""
        return edge_key(self.vertex(i), self.vertex(i + 1))

    def edges(self) -> List[Edge]:
        return [self.edge(i) for i in range(self.size)]

    def index_of(self, v: int) -> int:
        return self.boundary.index(v)


def _check_rotation(rotation: Sequence[Sequence[int]]) -> Rotation:
    n = len(rotation)
    rot = tuple(tuple(int(u) for u in nbrs) for nbrs in rotation)
    for v, nbrs in enumerate(rot):
        if not nbrs:
            raise EmbeddingError(f"vertex {v} has no neighbors")
        if len(set(nbrs)) != len(nbrs):
            raise EmbeddingError(f"vertex {v} lists a neighbor twice: {list(nbrs)}")
        for u in nbrs:
            if not 0 <= u < n:
                raise EmbeddingError(f"vertex {v} lists neighbor {u} outside 0..{n - 1}")
            if u == v:
                raise EmbeddingError(f"vertex {v} has a loop")
            if v not in rot[u]:
                raise EmbeddingError(f"adjacency is not symmetric: {v}->{u} has no reverse")
    return rot


def _next_dart(rot: Rotation, dart: Dart) -> Dart:
    u, v = dart
    around = rot[v]
    return (v, around[(around.index(u) - 1) % len(around)])


def trace_faces(rotation: Sequence[Sequence[int]]) -> List[Face]:
    """Trace every face of a rotation system.

    Each directed edge lies on exactly one traced boundary. Faces are numbered
    in the order their first dart appears when scanning vertices ascending and
    each rotation list in order.
    """
    rot = _check_rotation(rotation)
    dart_face: Dict[Dart, int] = {}
    boundaries: List[Tuple[int, ...]] = []
    total_darts = sum(len(nbrs) for nbrs in rot)

    for u, nbrs in enumerate(rot):
        for v in nbrs:
            if (u, v) in dart_face:
                continue
            face_id = len(boundaries)
            walk: List[int] = []
            dart = (u, v)
            while dart not in dart_face:
                if len(walk) > total_darts:
                    raise EmbeddingError(f"face tracing from dart {(u, v)} does not close")
                dart_face[dart] = face_id
                walk.append(dart[0])
                dart = _next_dart(rot, dart)
            if dart != (u, v):
                raise EmbeddingError(f"face tracing from dart {(u, v)} does not close")
            if len(set(walk)) != len(walk):
                raise EmbeddingError(f"face {face_id} revisits a vertex: {walk}")
            boundaries.append(tuple(walk))

    faces: List[Face] = []
    for face_id, walk in enumerate(boundaries):
        k = len(walk)
        across = tuple(dart_face[(walk[(i + 1) % k], walk[i])] for i in range(k))
        if face_id in across:
            raise EmbeddingError(f"face {face_id} lies on both sides of one of its edges")
        faces.append(Face(face_id, walk, across))
    return faces


@dataclass(frozen=True)
class FullereneGraph:
    rotation: Rotation
    faces: Tuple[Face, ...]
    name: str = ""

    @classmethod
    def from_rotation(cls, rotation: Sequence[Sequence[int]], name: str = "") -> "FullereneGraph":
        rot = _check_rotation(rotation)
        return cls(rot, tuple(trace_faces(rot)), name)

    @property
    def n(self) -> int:
        return len(self.rotation)

    @property
    def f(self) -> int:
        return len(self.faces)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.rotation[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.rotation[u]

    @cached_property
    def edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted({edge_key(u, v) for u, nbrs in enumerate(self.rotation) for v in nbrs}))

    @cached_property
    def _dart_faces(self) -> Dict[Dart, int]:
        lookup: Dict[Dart, int] = {}
        for face in self.faces:
            for i in range(face.size):
                lookup[(face.vertex(i), face.vertex(i + 1))] = face.id
        return lookup

    def face_of_dart(self, u: int, v: int) -> int:
        return self._dart_faces[(u, v)]

    def faces_of_vertex(self, v: int) -> Tuple[int, ...]:
        """Ids of the faces incident with v, one per outgoing dart."""
        return tuple(self._dart_faces[(v, u)] for u in self.rotation[v])

    def faces_of_edge(self, u: int, v: int) -> Tuple[int, int]:
        return (self._dart_faces[(u, v)], self._dart_faces[(v, u)])

    def face_across(self, face_id: int, i: int) -> int:
        """The face f_{i,i+1}: the other face containing boundary edge v_i v_{i+1}."""
        face = self.faces[face_id]
        return face.neighbors[i % face.size]

    @property
    def pentagon_count(self) -> int:
        return sum(1 for face in self.faces if face.size == 5)

    def face_size_counts(self) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for face in self.faces:
            counts[face.size] = counts.get(face.size, 0) + 1
        return counts

    def to_networkx(self, drop: Iterable[int] = ()) -> nx.Graph:
        skip = set(drop)
        G = nx.Graph()
        G.add_nodes_from(v for v in range(self.n) if v not in skip)
        G.add_edges_from((u, v) for u, v in self.edges if u not in skip and v not in skip)
        return G

    def relabel(self, permutation: Sequence[int], name: Optional[str] = None) -> "FullereneGraph":
        """Copy of the graph with vertex v renamed permutation[v]."""
        rot: List[Tuple[int, ...]] = [()] * self.n
        for v, nbrs in enumerate(self.rotation):
            rot[permutation[v]] = tuple(permutation[u] for u in nbrs)
        return FullereneGraph.from_rotation(rot, name if name is not None else self.name)


def rotation_from_networkx(G: nx.Graph) -> Rotation:
    """Clockwise rotation system of a planar graph labelled 0..n-1."""
    is_planar, embedding = nx.check_planarity(G)
    if not is_planar:
        raise EmbeddingError("graph is not planar, cannot derive a rotation system")
    nodes = sorted(G.nodes())
    if nodes != list(range(len(nodes))):
        raise EmbeddingError("graph vertices must be labelled 0..n-1")
    return tuple(tuple(embedding.neighbors_cw_order(v)) for v in nodes)
