"""Longest-cycle search: exact branch-and-bound, brute-force oracle and a seeded heuristic.

The exact search anchors every candidate cycle at its smallest vertex s and
walks paths s, a, ... through vertices larger than s, closing only when the
last vertex exceeds a. Each cycle is therefore met exactly once, as its
canonical sequence, and neighbors are tried in ascending order so cycles
are met in lexicographic order.
"""

from __future__ import annotations

import hashlib
import multiprocessing
import random
import struct
import time
from concurrent.futures import ProcessPoolExecutor
from typing import FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx

from ..config import DEFAULT_SEED, ORACLE_MAX_ORDER, logger
from ..exceptions import OracleLimitError
from ..graphs.embedding import FullereneGraph, edge_key
from .config import BUDGET_CHECK_INTERVAL, GIRTH, SEED_RADIUS
from .datamodel import CycleState, SearchBudget, SearchResult
from .reroute import apply_move, face_segment_swap, improve_until_stable


def make_rng(seed: int, subsystem: str) -> random.Random:
    """Create a deterministic RNG for a specific subsystem."""
    h = hashlib.sha256(f"{seed}:{subsystem}".encode()).digest()
    sub_seed = struct.unpack('<Q', h[:8])[0]
    return random.Random(sub_seed)


def verify_cycle(g: FullereneGraph, c: CycleState, forbidden: Iterable[int] = ()) -> List[str]:
    """Independent checker: an empty list means c is a simple cycle of g avoiding forbidden."""
    problems = []
    order = c.order
    if len(set(order)) != len(order):
        problems.append("cycle repeats a vertex")
    if len(order) < GIRTH:
        problems.append(f"cycle has {len(order)} vertices, fewer than the girth {GIRTH}")
    for i, v in enumerate(order):
        if not 0 <= v < g.n:
            problems.append(f"vertex {v} is not in the graph")
            continue
        u = order[(i + 1) % len(order)]
        if not g.has_edge(v, u):
            problems.append(f"{v}-{u} is not an edge")
    expected = {edge_key(order[i], order[(i + 1) % len(order)]) for i in range(len(order))} if order else set()
    if set(c.edge_set) != expected or len(c.edge_set) != len(order):
        problems.append("edge set does not match the vertex order")
    hit = sorted(set(order) & set(forbidden))
    if hit:
        problems.append(f"cycle uses forbidden vertices {hit}")
    return problems


def cycle_upper_bound(g: FullereneGraph, forbidden: FrozenSet[int] = frozenset()) -> int:
    """Vertex count of the largest block of the 2-core; no cycle is longer."""
    core = nx.k_core(g.to_networkx(drop=forbidden), 2)
    sizes = [len(block) for block in nx.biconnected_components(core) if len(block) >= 3]
    return max(sizes, default=0)


# --- Brute-force oracle ---

def brute_force_longest_cycle(
    g: FullereneGraph,
    forbidden: FrozenSet[int] = frozenset(),
    n_limit: int = ORACLE_MAX_ORDER,
) -> CycleState:
    """Enumerate every simple cycle; longest wins, ties go to the least canonical sequence."""
    if g.n > n_limit:
        raise OracleLimitError(f"Oracle refuses n={g.n} (limit {n_limit})")
    best: Optional[Tuple[int, ...]] = None
    for raw in nx.simple_cycles(g.to_networkx(drop=forbidden)):
        if len(raw) < 3:
            continue
        canon = CycleState.from_order(raw).canonical().order
        if best is None or len(canon) > len(best) or (len(canon) == len(best) and canon < best):
            best = canon
    return CycleState.EMPTY if best is None else CycleState.from_order(best)


# --- Exact branch-and-bound ---

class _BudgetExhausted(Exception):
    pass


class _TargetReached(Exception):
    pass


class _BranchAndBound:
    def __init__(self, g: FullereneGraph, forbidden: FrozenSet[int], budget: SearchBudget,
                 upper_bound: int, deadline: float, shared=None):
        self.adj = [tuple(sorted(nbrs)) for nbrs in g.rotation]
        self.blocked = [v in forbidden for v in range(g.n)]
        self.budget = budget
        self.upper_bound = upper_bound
        self.deadline = deadline
        self.shared = shared
        self.nodes = 0
        self.floor = 2
        self.best: Optional[List[int]] = None

    def _tick(self):
        self.nodes += 1
        if self.nodes >= self.budget.node_limit:
            raise _BudgetExhausted()
        if self.nodes % BUDGET_CHECK_INTERVAL == 0 and time.time() > self.deadline:
            raise _BudgetExhausted()

    def _shared_floor(self) -> int:
        # a stale read is only ever smaller, which keeps the pruning sound
        return self.shared.value - 1 if self.shared is not None else 0

    def _record(self, path: List[int]):
        self.best = list(path)
        self.floor = len(path)
        if self.shared is not None:
            with self.shared.get_lock():
                if len(path) > self.shared.value:
                    self.shared.value = len(path)
        logger.debug(f"Incumbent {len(path)} from anchor {path[0]} after {self.nodes} nodes")
        target = self.budget.target_length
        if len(path) >= self.upper_bound or (target is not None and len(path) >= target):
            raise _TargetReached()

    def _bound(self, s: int, second: int, end: int, on_path: List[bool], path_len: int) -> int:
        """path length plus reachable vertices that could still sit inside the closing path.

        Returns 0 when no admissible closing neighbor of s is reachable.
        """
        adj, blocked = self.adj, self.blocked
        reach = set()
        stack = [end]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u > s and not on_path[u] and not blocked[u] and u not in reach:
                    reach.add(u)
                    stack.append(u)
        closable = any(c > second and c in reach for c in adj[s])
        if not closable:
            return 0
        ends = (end, s)
        count = 0
        for x in reach:
            touching = sum(1 for u in adj[x] if u in reach or u in ends)
            if touching >= 2:
                count += 1
        return path_len + count

    def _dfs(self, s: int, path: List[int], on_path: List[bool]):
        self._tick()
        end = path[-1]
        second = path[1]
        if len(path) >= 3 and end > second and s in self.adj[end] and len(path) > self.floor:
            self._record(path)
        floor = max(self.floor, self._shared_floor())
        if self._bound(s, second, end, on_path, len(path)) <= floor:
            return
        for u in self.adj[end]:
            if u > s and not on_path[u] and not self.blocked[u]:
                on_path[u] = True
                path.append(u)
                self._dfs(s, path, on_path)
                path.pop()
                on_path[u] = False

    def search_anchor(self, s: int):
        if self.blocked[s]:
            return
        on_path = [False] * len(self.adj)
        on_path[s] = True
        for a in self.adj[s]:
            if a > s and not self.blocked[a]:
                on_path[a] = True
                self._dfs(s, [s, a], on_path)
                on_path[a] = False


_WORKER_SHARED = None


def _init_worker(shared):
    global _WORKER_SHARED
    _WORKER_SHARED = shared


def _anchor_task(args) -> Tuple[int, Optional[List[int]], int, bool]:
    g, forbidden, budget, upper_bound, deadline, floor, anchor = args
    bb = _BranchAndBound(g, forbidden, budget, upper_bound, deadline, shared=_WORKER_SHARED)
    bb.floor = floor
    exhausted = False
    try:
        bb.search_anchor(anchor)
    except _TargetReached:
        pass
    except _BudgetExhausted:
        exhausted = True
    return anchor, bb.best, bb.nodes, exhausted


def _parallel_pass(g, forbidden, budget, upper_bound, deadline, floor, workers) -> Tuple[Optional[List[int]], int, bool]:
    shared = multiprocessing.Value('i', floor + 1 if floor > 2 else 0)
    anchors = [v for v in range(g.n) if v not in forbidden]
    tasks = [(g, forbidden, budget, upper_bound, deadline, floor, s) for s in anchors]
    best: Optional[List[int]] = None
    nodes, exhausted = 0, False
    with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker, initargs=(shared,)) as ex:
        # results come back in anchor order; the smallest anchor keeps ties
        for _, found, count, ran_out in ex.map(_anchor_task, tasks):
            nodes += count
            exhausted = exhausted or ran_out
            if found is not None and (best is None or len(found) > len(best)):
                best = found
    return best, nodes, exhausted


def _serial_pass(g, forbidden, budget, upper_bound, deadline, floor) -> Tuple[Optional[List[int]], int, bool]:
    bb = _BranchAndBound(g, forbidden, budget, upper_bound, deadline)
    bb.floor = floor
    exhausted = False
    try:
        for s in range(g.n):
            if g.n - s <= bb.floor:
                break
            bb.search_anchor(s)
    except _TargetReached:
        pass
    except _BudgetExhausted:
        exhausted = True
    return bb.best, bb.nodes, exhausted


def longest_cycle_exact(
    g: FullereneGraph,
    forbidden: Iterable[int] = (),
    budget: Optional[SearchBudget] = None,
    *,
    workers: int = 1,
    seed: int = DEFAULT_SEED,
    use_heuristic: bool = True,
) -> SearchResult:
    """Longest simple cycle avoiding `forbidden`, proven optimal when the search completes.

    A first pass only looks for a cycle as long as the block upper bound;
    when none exists a second pass searches everything longer than the
    heuristic seed. Among longest cycles the lexicographically least
    canonical sequence is returned.
    """
    budget = budget or SearchBudget()
    blocked = frozenset(forbidden)
    start = time.time()
    deadline = start + budget.time_limit
    ub = cycle_upper_bound(g, blocked)

    seed_cycle = CycleState.EMPTY
    if use_heuristic and ub >= 3:
        seed_cycle = heuristic_long_cycle(g, seed, forbidden=blocked, radius=SEED_RADIUS)

    def run(floor: int):
        if workers > 1:
            return _parallel_pass(g, blocked, budget, ub, deadline, floor, workers)
        return _serial_pass(g, blocked, budget, ub, deadline, floor)

    nodes = 0
    found: Optional[List[int]] = None
    exhausted = False
    if ub >= 3:
        found, nodes, exhausted = run(ub - 1)
        if found is None and not exhausted:
            floor = max(seed_cycle.length - 1, 2)
            found, more, exhausted = run(floor)
            nodes += more

    elapsed_ms = (time.time() - start) * 1000.0
    target = budget.target_length
    if found is not None:
        cycle = CycleState.from_order(found)
        reached_target = target is not None and cycle.length >= target
        optimal = not exhausted and (target is None or not reached_target or cycle.length == ub)
        if exhausted and seed_cycle.length > cycle.length:
            cycle = seed_cycle
    else:
        cycle = seed_cycle if exhausted else CycleState.EMPTY
        optimal = not exhausted

    if exhausted:
        logger.warning(f"{g.name or 'graph'}: search budget exhausted after {nodes} nodes; best length {cycle.length}")
    else:
        logger.info(f"{g.name or 'graph'}: longest cycle {cycle.length} (upper bound {ub}, {nodes} nodes, {elapsed_ms:.0f} ms)")
    return SearchResult(cycle=cycle, optimal=optimal, nodes=nodes, elapsed_ms=elapsed_ms, upper_bound=ub)


# --- Heuristic ---

def heuristic_long_cycle(
    g: FullereneGraph,
    seed: int = DEFAULT_SEED,
    *,
    forbidden: FrozenSet[int] = frozenset(),
    radius: int = SEED_RADIUS,
) -> CycleState:
    """Grow a cycle from a random face by absorbing neighboring faces, then polish it.

    Absorbing a face replaces the cycle's run along that face by the face's
    other side, which is exactly a segment swap. Among the faces that can be
    absorbed, the one sharing the fewest cycle edges goes first; ties follow
    the seeded shuffle.
    """
    rng = make_rng(seed, "heuristic_long_cycle")
    candidates = [face.id for face in g.faces if not forbidden.intersection(face.boundary)]
    if not candidates:
        return CycleState.EMPTY

    start = g.faces[rng.choice(candidates)]
    current = CycleState.from_order(start.boundary)
    order = list(range(g.f))
    while True:
        rng.shuffle(order)
        moves = [m for m in (face_segment_swap(g, current, i, forbidden=forbidden) for i in order) if m]
        if not moves:
            break
        # shortest replaced run first: absorbing along one edge leaves no vertex stranded inside
        best = min(moves, key=lambda m: len(m.removed))
        current = apply_move(g, current, best)

    if radius > 0:
        current = improve_until_stable(g, current, radius, forbidden=forbidden)
    logger.debug(f"Heuristic cycle of length {current.length} (seed {seed})")
    return current.canonical()

