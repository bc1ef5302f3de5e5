"""Black/white coloring relative to a cycle, traversal patterns and the structural checks."""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import List, Sequence, Tuple

from ..graphs.embedding import Face, FullereneGraph
from .config import logger
from .datamodel import CycleState, FaceClass, FaceColoring, LemmaCheck, LemmaSuite, TraversalPattern

BLACK_CHAR = "B"
WHITE_CHAR = "W"
IN_CYCLE = "="
OFF_CYCLE = "-"

_CLASS_BY_COUNT = {0: FaceClass.BLACK, 1: FaceClass.SINGLE, 2: FaceClass.WHITE}


def color(g: FullereneGraph, c: CycleState) -> FaceColoring:
    white = tuple(not c.contains_vertex(v) for v in range(g.n))
    face_whites = tuple(sum(1 for v in face.boundary if white[v]) for face in g.faces)
    face_class = tuple(_CLASS_BY_COUNT.get(k, FaceClass.OVERFULL) for k in face_whites)
    return FaceColoring(white, face_whites, face_class)


def _face_with_path(g: FullereneGraph, a: int, v: int, b: int) -> int:
    """The face whose boundary contains both edges av and vb."""
    for face_id in g.faces_of_vertex(v):
        boundary = g.faces[face_id].boundary
        if a in boundary and b in boundary:
            return face_id
    raise KeyError((a, v, b))


def check_no_white_p3(g: FullereneGraph, coloring: FaceColoring) -> LemmaCheck:
    for v in coloring.white_vertices():
        whites = sorted(u for u in g.neighbors(v) if coloring.is_white(u))
        if len(whites) >= 2:
            a, b = whites[0], whites[1]
            return LemmaCheck("no_white_p3", False, (a, v, b), _face_with_path(g, a, v, b))
    return LemmaCheck("no_white_p3", True)


def _white_on(face: Face, coloring: FaceColoring) -> Tuple[int, ...]:
    return tuple(v for v in face.boundary if coloring.is_white(v))


def check_no_white_pentagon(g: FullereneGraph, coloring: FaceColoring) -> LemmaCheck:
    """Pentagons with exactly two whites. Overfull ones are left to the max-two check."""
    for face in g.faces:
        if face.size == 5 and coloring.face_whites[face.id] == 2:
            return LemmaCheck("no_white_pentagon", False, _white_on(face, coloring), face.id)
    return LemmaCheck("no_white_pentagon", True)


def check_max_two_whites_per_face(g: FullereneGraph, coloring: FaceColoring) -> LemmaCheck:
    for face in g.faces:
        if coloring.face_whites[face.id] > 2:
            return LemmaCheck("max_two_whites", False, _white_on(face, coloring), face.id)
    return LemmaCheck("max_two_whites", True)


def run_lemma_checks(g: FullereneGraph, coloring: FaceColoring) -> LemmaSuite:
    suite = LemmaSuite(
        check_no_white_p3(g, coloring),
        check_no_white_pentagon(g, coloring),
        check_max_two_whites_per_face(g, coloring),
    )
    if not suite.ok:
        logger.debug(f"Structural checks failed on faces {suite.witness_faces()}")
    return suite


# --- Traversal patterns ---

def _tokens(vertex_chars: Sequence[str], edge_chars: Sequence[str]) -> List[Tuple[str, str]]:
    return list(zip(vertex_chars, edge_chars))


def canonical_word(vertex_chars: Sequence[str], edge_chars: Sequence[str]) -> str:
    """Least interleaved word over all rotations and both orientations.

    edge_chars[i] marks the boundary edge between vertex i and vertex i+1.
    """
    k = len(vertex_chars)
    forward = _tokens(vertex_chars, edge_chars)
    # reversed orientation: vertex j is followed by edge j-1
    backward = [(vertex_chars[j % k], edge_chars[(j - 1) % k]) for j in range(0, -k, -1)]
    words = []
    for tokens in (forward, backward):
        for shift in range(k):
            rotated = tokens[shift:] + tokens[:shift]
            words.append("".join(v + e for v, e in rotated))
    return min(words)


def _feasible(vertex_chars: Sequence[str], edge_chars: Sequence[str]) -> bool:
    k = len(vertex_chars)
    for i in range(k):
        before, after = edge_chars[(i - 1) % k], edge_chars[i]
        on_cycle = (before == IN_CYCLE) + (after == IN_CYCLE)
        if vertex_chars[i] == WHITE_CHAR:
            if on_cycle:
                return False
            if vertex_chars[(i - 1) % k] == WHITE_CHAR and vertex_chars[(i + 1) % k] == WHITE_CHAR:
                return False
        elif on_cycle == 0:
            # the third edge of a black vertex leaves the face, so the cycle uses a boundary edge
            return False
    return True


@lru_cache(maxsize=None)
def pattern_catalogue(include_facial: bool = False) -> Tuple[str, ...]:
    """Canonical words of every feasible traversal of a pentagon or hexagon.

    A word is feasible when white vertices have no incident cycle edge, black
    vertices have one or two boundary cycle edges, and no three consecutive
    boundary vertices are white. Faces whose whole boundary is the cycle are
    left out unless include_facial is set.
    """
    found = set()
    for size in (5, 6):
        for vertex_chars in product((BLACK_CHAR, WHITE_CHAR), repeat=size):
            for edge_chars in product((IN_CYCLE, OFF_CYCLE), repeat=size):
                if not include_facial and all(e == IN_CYCLE for e in edge_chars):
                    continue
                if _feasible(vertex_chars, edge_chars):
                    found.add(canonical_word(vertex_chars, edge_chars))
    return tuple(sorted(found, key=lambda w: (len(w), w)))


def face_word(face: Face, coloring: FaceColoring, c: CycleState) -> Tuple[List[str], List[str]]:
    vertex_chars = [WHITE_CHAR if coloring.is_white(v) else BLACK_CHAR for v in face.boundary]
    edge_chars = [IN_CYCLE if c.contains_edge(*face.edge(i)) else OFF_CYCLE for i in range(face.size)]
    return vertex_chars, edge_chars


def classify_pattern(face: Face, coloring: FaceColoring, c: CycleState) -> TraversalPattern:
    vertex_chars, edge_chars = face_word(face, coloring, c)
    word = "".join(v + e for v, e in zip(vertex_chars, edge_chars))
    canon = canonical_word(vertex_chars, edge_chars)
    catalogue = pattern_catalogue()
    in_catalogue = canon in catalogue
    canonical_id = catalogue.index(canon) if in_catalogue else None
    white_pentagon = face.size == 5 and coloring.face_whites[face.id] >= 2
    return TraversalPattern(
        face_id=face.id,
        word=word,
        canonical=canon,
        canonical_id=canonical_id,
        in_catalogue=in_catalogue,
        lemma_consistent=in_catalogue and not white_pentagon,
    )


def classify_all(g: FullereneGraph, coloring: FaceColoring, c: CycleState) -> List[TraversalPattern]:
    return [classify_pattern(face, coloring, c) for face in g.faces]
