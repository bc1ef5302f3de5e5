"""Cycle-lengthening moves: the face segment swap and the bounded local reroute."""

from __future__ import annotations

from collections import deque
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from ..exceptions import ConfigurationError, InternalConsistencyError
from ..graphs.embedding import Edge, FullereneGraph, edge_key
from .classify import color, run_lemma_checks
from .config import DEFAULT_RADIUS, LOCAL_SEARCH_NODE_LIMIT, MAX_REROUTE_RADIUS, logger
from .datamodel import CycleState, MoveKind, RerouteMove


def _path_edges(path: Sequence[int]) -> FrozenSet[Edge]:
    return frozenset(edge_key(path[i], path[i + 1]) for i in range(len(path) - 1))


def face_segment_swap(
    g: FullereneGraph,
    c: CycleState,
    face_id: int,
    *,
    forbidden: FrozenSet[int] = frozenset(),
) -> Optional[RerouteMove]:
    """Replace the cycle's run P along a face by the longer white side Q of the same face."""
    face = g.faces[face_id]
    k = face.size
    in_c = [c.contains_edge(*face.edge(i)) for i in range(k)]
    run = sum(in_c)
    if run == 0 or run == k:
        return None

    start = next(i for i in range(k) if in_c[i] and not in_c[i - 1])
    if not all(in_c[(start + j) % k] for j in range(run)):
        return None  # more than one run

    # P: v_start .. v_{start+run}; Q walks the rest of the boundary between the same endpoints
    p_path = [face.vertex(start + j) for j in range(run + 1)]
    q_path = [face.vertex(start + run + j) for j in range(k - run + 1)]
    if len(q_path) <= len(p_path):
        return None
    if any(c.contains_vertex(v) or v in forbidden for v in q_path[1:-1]):
        return None

    return RerouteMove(
        kind=MoveKind.SEGMENT_SWAP,
        region=(face_id,),
        removed=_path_edges(p_path),
        added=_path_edges(q_path),
        delta=len(q_path) - len(p_path),
    )


def cycle_from_edges(edges: Iterable[Edge]) -> CycleState:
    """Walk an edge set that must form one simple cycle; returns it in canonical form."""
    adjacency: Dict[int, List[int]] = {}
    edge_list = list(edges)
    for u, v in edge_list:
        adjacency.setdefault(u, []).append(v)
        adjacency.setdefault(v, []).append(u)
    if not adjacency or any(len(nbrs) != 2 for nbrs in adjacency.values()):
        raise InternalConsistencyError("edited edge set is not 2-regular")

    start = min(adjacency)
    order = [start, min(adjacency[start])]
    while True:
        a, b = adjacency[order[-1]]
        nxt = a if a != order[-2] else b
        if nxt == start:
            break
        order.append(nxt)
    if len(order) != len(edge_list):
        raise InternalConsistencyError(f"edited edge set splits into several cycles ({len(order)} of {len(edge_list)} edges walked)")
    return CycleState.from_order(order)


def apply_move(g: FullereneGraph, c: CycleState, move: RerouteMove) -> CycleState:
    if not move.removed <= c.edge_set:
        raise InternalConsistencyError("move removes edges that are not on the cycle")
    if any(not g.has_edge(u, v) for u, v in move.added):
        raise InternalConsistencyError("move adds an edge missing from the graph")
    result = cycle_from_edges((c.edge_set - move.removed) | move.added)
    if result.length != c.length + move.delta:
        raise InternalConsistencyError(
            f"move promised delta {move.delta} but changed length {c.length} -> {result.length}"
        )
    return result


# --- Bounded local reroute ---

def _ball(g: FullereneGraph, region: Iterable[int], radius: int) -> Set[int]:
    seeds = {v for face_id in region for v in g.faces[face_id].boundary}
    dist = {v: 0 for v in seeds}
    queue = deque(seeds)
    while queue:
        v = queue.popleft()
        if dist[v] == radius:
            continue
        for u in g.neighbors(v):
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    return set(dist)


def _segments(fixed: FrozenSet[Edge]) -> List[List[int]]:
    """Split a union of vertex-disjoint paths into vertex sequences, ordered by smallest endpoint."""
    adjacency: Dict[int, List[int]] = {}
    for u, v in fixed:
        adjacency.setdefault(u, []).append(v)
        adjacency.setdefault(v, []).append(u)
    ends = sorted(v for v, nbrs in adjacency.items() if len(nbrs) == 1)
    seen: Set[int] = set()
    paths = []
    for a in ends:
        if a in seen:
            continue
        path = [a]
        prev, cur = None, a
        while True:
            nxt = [u for u in adjacency[cur] if u != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            path.append(cur)
        seen.update(path)
        paths.append(path)
    return paths


class _LocalLimit(Exception):
    pass


class _LocalSearch:
    """Link fixed segments into one cycle through free ball vertices, maximizing its length."""

    def __init__(self, g: FullereneGraph, free: Set[int], segments: List[List[int]], floor: int):
        self.g = g
        self.free = free
        self.segments = segments
        self.port_of: Dict[int, int] = {}
        for idx, seg in enumerate(segments):
            self.port_of[seg[0]] = idx
            self.port_of[seg[-1]] = idx
        self.best = floor
        self.best_order: Optional[List[int]] = None
        self.nodes = 0

    def _tick(self):
        self.nodes += 1
        if self.nodes > LOCAL_SEARCH_NODE_LIMIT:
            raise _LocalLimit()

    def run_linking(self) -> Optional[List[int]]:
        first = self.segments[0]
        order = list(first)
        self._extend(order, first[-1], first[0], {0}, set())
        return self.best_order

    def _reachable_bound(self, end: int, done: Set[int], used: Set[int]) -> int:
        """Free vertices and unlinked segment vertices still reachable from the path end."""
        gain = 0
        seen = {end}
        stack = [end]
        while stack:
            v = stack.pop()
            for u in self.g.neighbors(v):
                if u in seen:
                    continue
                if u in self.free and u not in used:
                    seen.add(u)
                    gain += 1
                    stack.append(u)
                elif u in self.port_of and self.port_of[u] not in done:
                    seg = self.segments[self.port_of[u]]
                    other = seg[-1] if seg[0] == u else seg[0]
                    seen.update((u, other))
                    gain += len(seg)
                    stack.append(other)
        return gain

    def _extend(self, order: List[int], end: int, home: int, done: Set[int], used: Set[int]):
        self._tick()
        if len(order) + self._reachable_bound(end, done, used) <= self.best:
            return
        for u in sorted(self.g.neighbors(end)):
            if u == home and len(done) == len(self.segments) and len(order) > 2:
                if len(order) > self.best:
                    self.best = len(order)
                    self.best_order = list(order)
                continue
            if u in self.free and u not in used:
                used.add(u)
                order.append(u)
                self._extend(order, u, home, done, used)
                order.pop()
                used.discard(u)
            elif u in self.port_of:
                idx = self.port_of[u]
                if idx in done:
                    continue
                seg = self.segments[idx]
                walk = seg if seg[0] == u else list(reversed(seg))
                done.add(idx)
                order.extend(walk)
                self._extend(order, walk[-1], home, done, used)
                del order[-len(walk):]
                done.discard(idx)

    def run_free(self) -> Optional[List[int]]:
        """Longest cycle inside the free vertices alone, anchored at its smallest vertex."""
        for s in sorted(self.free):
            allowed = {v for v in self.free if v > s}
            if len(allowed) + 1 <= self.best:
                break
            self._free_dfs([s], s, allowed, set())
        return self.best_order

    def _free_dfs(self, order: List[int], s: int, allowed: Set[int], used: Set[int]):
        self._tick()
        if len(order) + len(allowed - used) <= self.best:
            return
        end = order[-1]
        for u in sorted(self.g.neighbors(end)):
            if u == s and len(order) >= 3 and order[-1] > order[1]:
                if len(order) > self.best:
                    self.best = len(order)
                    self.best_order = list(order)
            elif u in allowed and u not in used:
                used.add(u)
                order.append(u)
                self._free_dfs(order, s, allowed, used)
                order.pop()
                used.discard(u)


def bounded_local_reroute(
    g: FullereneGraph,
    c: CycleState,
    region: Sequence[int],
    radius: int = DEFAULT_RADIUS,
    *,
    forbidden: FrozenSet[int] = frozenset(),
) -> Optional[RerouteMove]:
    """Best strictly longer cycle that differs from c only on edges near the region.

    The neighborhood is every vertex within graph distance `radius` of the
    region faces' boundaries; edges with both ends inside it may change,
    all other cycle edges stay.
    """
    if not 0 <= radius <= MAX_REROUTE_RADIUS:
        raise ConfigurationError(f"Invalid reroute radius: {radius} (must be 0..{MAX_REROUTE_RADIUS})")
    if c.is_empty or not region:
        return None

    ball = _ball(g, region, radius)
    fixed = frozenset(e for e in c.edge_set if not (e[0] in ball and e[1] in ball))
    segments = _segments(fixed)
    if fixed and not segments:
        return None  # no cycle edge is local, nothing can move

    on_segments = {v for seg in segments for v in seg}
    free = {v for v in ball if v not in on_segments and v not in forbidden}
    search = _LocalSearch(g, free, segments, floor=c.length)
    try:
        order = search.run_linking() if segments else search.run_free()
    except _LocalLimit:
        logger.warning(f"Local reroute around faces {list(region)} hit the node limit; using best found")
        order = search.best_order
    if order is None:
        return None

    new_edges = CycleState.from_order(order).edge_set
    return RerouteMove(
        kind=MoveKind.BOUNDED_LOCAL,
        region=tuple(region),
        removed=c.edge_set - new_edges,
        added=new_edges - c.edge_set,
        delta=len(order) - c.length,
    )


def flagged_regions(g: FullereneGraph, c: CycleState) -> List[Tuple[int, ...]]:
    """Structural-check witness faces first, then every face touching a white vertex."""
    coloring = color(g, c)
    regions: List[Tuple[int, ...]] = []
    seen: Set[int] = set()
    for face_id in run_lemma_checks(g, coloring).witness_faces():
        if face_id not in seen:
            seen.add(face_id)
            regions.append((face_id,))
    for face in g.faces:
        if face.id not in seen and coloring.face_whites[face.id] > 0:
            seen.add(face.id)
            regions.append((face.id,))
    return regions


def improve_until_stable(
    g: FullereneGraph,
    c: CycleState,
    radius: int = DEFAULT_RADIUS,
    *,
    forbidden: FrozenSet[int] = frozenset(),
    moves: Optional[List[RerouteMove]] = None,
) -> CycleState:
    """Apply improving moves until none is left; the length strictly grows per applied move."""
    if not 0 <= radius <= MAX_REROUTE_RADIUS:
        raise ConfigurationError(f"Invalid reroute radius: {radius} (must be 0..{MAX_REROUTE_RADIUS})")
    current = c
    while True:
        move = next(
            (m for m in (face_segment_swap(g, current, face.id, forbidden=forbidden) for face in g.faces) if m),
            None,
        )
        if move is None and radius > 0:
            for region in flagged_regions(g, current):
                move = bounded_local_reroute(g, current, region, radius, forbidden=forbidden)
                if move is not None:
                    break
        if move is None:
            return current
        current = apply_move(g, current, move)
        logger.debug(f"{move.kind.value} on faces {list(move.region)}: +{move.delta} -> {current.length}")
        if moves is not None:
            moves.append(move)
