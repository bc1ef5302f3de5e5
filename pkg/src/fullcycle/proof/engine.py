"""High-level orchestrator: solve, color, check, discharge, audit and bound each instance."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence

from ..config import DEFAULT_SEED, ORACLE_MAX_ORDER, logger
from ..corpus.reports import RunReport, RunRow
from ..exceptions import ConfigurationError, OracleLimitError
from ..graphs.embedding import FullereneGraph
from .classify import classify_all, color, run_lemma_checks
from .config import DEFAULT_RADIUS, MAX_REROUTE_RADIUS
from .datamodel import CycleState, RerouteMove, SearchBudget
from .discharge import apply_rules, audit_final, derive_bound, initial_charges, theorem_length_bound
from .reroute import bounded_local_reroute, face_segment_swap
from .search import brute_force_longest_cycle, longest_cycle_exact, verify_cycle


@dataclass
class InstanceReport:
    row: RunRow
    failed: bool
    detail: Dict[str, Any]


def _witness_moves(g: FullereneGraph, c: CycleState, faces: Iterable[int], radius: int,
                   forbidden: FrozenSet[int]) -> List[RerouteMove]:
    moves = []
    for face_id in faces:
        move = face_segment_swap(g, c, face_id, forbidden=forbidden)
        if move is None and radius > 0:
            move = bounded_local_reroute(g, c, (face_id,), radius, forbidden=forbidden)
        if move is not None:
            moves.append(move)
    return moves


def verify_instance(
    g: FullereneGraph,
    *,
    forbidden: Iterable[int] = (),
    budget: Optional[SearchBudget] = None,
    radius: int = DEFAULT_RADIUS,
    seed: int = DEFAULT_SEED,
    search_workers: int = 1,
) -> InstanceReport:
    """Run the whole pipeline on one graph."""
    if not 0 <= radius <= MAX_REROUTE_RADIUS:
        raise ConfigurationError(f"Invalid reroute radius: {radius} (must be 0..{MAX_REROUTE_RADIUS})")
    blocked = frozenset(forbidden)
    bad = sorted(v for v in blocked if not 0 <= v < g.n)
    if bad:
        raise ConfigurationError(f"Forbidden vertices {bad} are not in {g.name} (n={g.n})")

    start = time.time()
    logger.info(f"Verifying {g.name}: n={g.n}, forbidden={sorted(blocked)}")
    result = longest_cycle_exact(g, blocked, budget, workers=search_workers, seed=seed)
    c = result.cycle

    coloring = color(g, c)
    suite = run_lemma_checks(g, coloring)
    patterns = classify_all(g, coloring, c)
    ledger = apply_rules(g, c, coloring, initial_charges(g, c, coloring))
    claim = result.optimal and not blocked
    audit = audit_final(g, c, coloring, ledger, longest_claim=claim)

    bound_report = None
    if claim and audit.passed:
        bound_report = derive_bound(g, audit)
        bound = bound_report.theorem_bound
    else:
        bound = theorem_length_bound(g.n)
    bound_ok = c.length >= bound

    witness_faces = suite.witness_faces() + [r[0] for r in audit.witness_regions]
    moves = _witness_moves(g, c, dict.fromkeys(witness_faces), radius, blocked) if witness_faces else []

    failed = not audit.conserved or (claim and (not suite.ok or not audit.passed or not bound_ok))
    if failed:
        logger.error(f"{g.name}: verification failed (checks ok={suite.ok}, audit ok={audit.passed}, "
                     f"length {c.length} vs bound {bound})")

    ms = (time.time() - start) * 1000.0
    row = RunRow(
        graph_id=g.name,
        n=g.n,
        f=g.f,
        pentagons=g.pentagon_count,
        length=c.length,
        optimal=result.optimal,
        w=coloring.white_count,
        p3_ok=suite.no_white_p3.passed,
        pentagon_ok=suite.no_white_pentagon.passed,
        two_white_ok=suite.max_two_whites.passed,
        max_charge_halfunits=audit.max_charge,
        conserved=audit.conserved,
        bound=bound,
        bound_ok=bound_ok,
        ms=ms,
    )
    out_of_catalogue = [p.face_id for p in patterns if not p.in_catalogue]
    detail = {
        "graph_id": g.name,
        "forbidden": sorted(blocked),
        "cycle": c.to_dict(),
        "search": {"optimal": result.optimal, "nodes": result.nodes, "upper_bound": result.upper_bound},
        "checks": suite.to_dict(),
        "patterns": {
            "out_of_catalogue": out_of_catalogue,
            "inconsistent": [p.face_id for p in patterns if not p.lemma_consistent],
            "canonical_ids": [p.canonical_id for p in patterns],
        },
        "audit": audit.to_dict(),
        "rule_log": [
            {"rule": a.rule.value, "donor": a.donor, "receiver": a.receiver, "edge": a.edge_index, "amount": a.amount}
            for a in ledger.rule_log
        ],
        "bound": bound_report.to_dict() if bound_report else None,
        "witness_moves": [m.to_dict() for m in moves],
    }
    logger.info(f"{g.name}: length {c.length}, w={coloring.white_count}, bound {bound} ({ms:.0f} ms)")
    return InstanceReport(row=row, failed=failed, detail=detail)


def _verify_task(args) -> InstanceReport:
    g, kwargs = args
    return verify_instance(g, **kwargs)


def verify_corpus(
    graphs: Sequence[FullereneGraph],
    *,
    workers: int = 1,
    **kwargs: Any,
) -> RunReport:
    """Verify every graph; rows follow input order whatever the worker count."""
    if workers < 1:
        raise ConfigurationError(f"Invalid worker count: {workers}")
    tasks = [(g, kwargs) for g in graphs]
    if workers > 1 and len(graphs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_verify_task, tasks))
    else:
        results = [_verify_task(t) for t in tasks]

    report = RunReport()
    for res in results:
        report.rows.append(res.row)
        report.details.append(res.detail)
        if res.failed:
            report.failures.append(res.row.graph_id)
    return report


# --- Oracle comparison ---

@dataclass(frozen=True)
class Discrepancy:
    graph_id: str
    forbidden: tuple
    exact_length: int
    oracle_length: int
    exact_order: tuple
    oracle_order: tuple
    problems: tuple

    def to_dict(self) -> Dict[str, Any]:
        return {
            "graph_id": self.graph_id,
            "forbidden": list(self.forbidden),
            "exact_length": self.exact_length,
            "oracle_length": self.oracle_length,
            "exact_order": list(self.exact_order),
            "oracle_order": list(self.oracle_order),
            "problems": list(self.problems),
        }


@dataclass
class OracleReport:
    comparisons: int = 0
    discrepancies: List[Discrepancy] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.discrepancies


def _corrupt(c: CycleState) -> CycleState:
    """Drop the last vertex; the result no longer closes along graph edges."""
    return CycleState.from_order(c.order[:-1]) if c.length > 3 else CycleState.EMPTY


def oracle_check(
    graphs: Sequence[FullereneGraph],
    n_limit: int = ORACLE_MAX_ORDER,
    *,
    each_vertex: bool = False,
    inject_fault: bool = False,
    budget: Optional[SearchBudget] = None,
) -> OracleReport:
    """Compare the exact search with exhaustive enumeration."""
    too_big = [g.name for g in graphs if g.n > n_limit]
    if too_big:
        raise OracleLimitError(f"Oracle check refuses graphs above n={n_limit}: {too_big}")

    report = OracleReport()
    for g in graphs:
        cases: List[FrozenSet[int]] = [frozenset()]
        if each_vertex:
            cases.extend(frozenset({v}) for v in range(g.n))
        for forbidden in cases:
            result = longest_cycle_exact(g, forbidden, budget)
            exact = _corrupt(result.cycle) if inject_fault else result.cycle
            oracle = brute_force_longest_cycle(g, forbidden, n_limit=n_limit)
            problems = verify_cycle(g, exact, forbidden) if not exact.is_empty else []
            if not result.optimal:
                problems.append("exact search did not finish within budget")
            report.comparisons += 1
            if problems or exact.order != oracle.order:
                report.discrepancies.append(Discrepancy(
                    graph_id=g.name,
                    forbidden=tuple(sorted(forbidden)),
                    exact_length=exact.length,
                    oracle_length=oracle.length,
                    exact_order=exact.order,
                    oracle_order=oracle.order,
                    problems=tuple(problems),
                ))
                logger.warning(f"Oracle mismatch on {g.name} forbidden={sorted(forbidden)}: "
                               f"exact {exact.length}, oracle {oracle.length}")
    logger.info(f"Oracle check: {report.comparisons} comparisons, {len(report.discrepancies)} discrepancies")
    return report


__all__ = [
    "Discrepancy",
    "InstanceReport",
    "OracleReport",
    "oracle_check",
    "verify_corpus",
    "verify_instance",
]
