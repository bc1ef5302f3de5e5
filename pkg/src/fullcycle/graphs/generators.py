"""Deterministic fullerene generators: (5,0) nanotubes and the truncated icosahedron."""

from __future__ import annotations

from typing import List, Tuple

import networkx as nx

from ..config import logger
from ..exceptions import ConfigurationError
from .embedding import FullereneGraph, rotation_from_networkx

RING = 5  # pentagonal symmetry of the (5,0) tube


def _ring_edges(ring: List[int]) -> List[Tuple[int, int]]:
    return [(ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring))]


def _nanotube_networkx(k: int) -> nx.Graph:
    """Two six-pentagon caps joined by k rings of five hexagons.

    Labels: cap pentagon 0..4, its spokes 5..9, the first open rim 10..14,
    then ten vertices per hexagon ring, then the closing pentagon.
    The boundary between layers is a 10-cycle alternating closed and open
    vertices; open vertices still need their third neighbor.
    """
    G = nx.Graph()
    top = list(range(RING))
    spokes = [RING + i for i in range(RING)]
    rim = [2 * RING + i for i in range(RING)]
    G.add_edges_from(_ring_edges(top))
    G.add_edges_from(zip(top, spokes))
    # 10-cycle spoke_0 rim_0 spoke_1 rim_1 ... closes the five cap pentagons
    boundary = [v for pair in zip(spokes, rim) for v in pair]
    G.add_edges_from(_ring_edges(boundary))
    open_vertices = rim
    next_label = 3 * RING

    for _ in range(k):
        closed = list(range(next_label, next_label + RING))
        fresh = list(range(next_label + RING, next_label + 2 * RING))
        next_label += 2 * RING
        G.add_edges_from(zip(open_vertices, closed))
        ring = [v for pair in zip(closed, fresh) for v in pair]
        G.add_edges_from(_ring_edges(ring))
        open_vertices = fresh

    bottom = list(range(next_label, next_label + RING))
    G.add_edges_from(zip(open_vertices, bottom))
    G.add_edges_from(_ring_edges(bottom))
    return G


def generate_nanotube(k: int) -> FullereneGraph:
    """The (5,0) nanotube fullerene with k hexagon rings, n = 20 + 10k."""
    if not isinstance(k, int) or k < 0:
        raise ConfigurationError(f"Invalid ring count: {k} (must be a non-negative integer)")
    G = _nanotube_networkx(k)
    graph = FullereneGraph.from_rotation(rotation_from_networkx(G), name=f"C{G.number_of_nodes()}-nanotube-k{k}")
    logger.debug(f"Generated {graph.name}: {graph.n} vertices, {graph.f} faces")
    return graph


def generate_dodecahedron() -> FullereneGraph:
    return generate_nanotube(0)


def _icosahedron_rotation() -> Tuple[Tuple[int, ...], ...]:
    return rotation_from_networkx(nx.icosahedral_graph())


def generate_buckyball() -> FullereneGraph:
    """The truncated icosahedron C60 (isolated pentagons).

    Every dart (v, u) of the icosahedron becomes a vertex; the five darts
    leaving an icosahedron vertex form a pentagon and each icosahedron edge
    becomes the edge between its two darts.
    """
    ico = _icosahedron_rotation()
    darts = sorted((v, u) for v, nbrs in enumerate(ico) for u in nbrs)
    label = {dart: i for i, dart in enumerate(darts)}

    G = nx.Graph()
    G.add_nodes_from(range(len(darts)))
    for v, nbrs in enumerate(ico):
        for i, u in enumerate(nbrs):
            G.add_edge(label[(v, u)], label[(u, v)])
            G.add_edge(label[(v, u)], label[(v, nbrs[(i + 1) % len(nbrs)])])

    graph = FullereneGraph.from_rotation(rotation_from_networkx(G), name="C60-Ih")
    logger.debug(f"Generated {graph.name}: {graph.n} vertices, {graph.f} faces")
    return graph
