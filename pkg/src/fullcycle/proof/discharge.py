"""Charge assignment, Rules A and B, the final-charge audit and the length bound.

All amounts are integer half-units (two half-units make one unit of charge).
"""

from __future__ import annotations

import math
from collections import defaultdict
from fractions import Fraction
from typing import Dict, List, Tuple

import numpy as np

from ..exceptions import AuditRefusalError, InternalConsistencyError
from ..graphs.embedding import FullereneGraph
from .config import (
    FACE_CHARGE_LIMIT,
    FACE_SHARE,
    RULE_A_AMOUNT,
    RULE_B_AMOUNT,
    WHITE_FACE_FINAL,
    WHITE_VERTEX_CHARGE,
    format_units,
    logger,
)
from .datamodel import (
    AuditReport,
    BoundReport,
    ChargeLedger,
    CycleState,
    FaceClass,
    FaceColoring,
    Rule,
    RuleApplication,
)

RULE_AMOUNTS = {Rule.A: RULE_A_AMOUNT, Rule.B: RULE_B_AMOUNT}


def initial_charges(g: FullereneGraph, c: CycleState, coloring: FaceColoring) -> ChargeLedger:
    """Every white vertex sends one unit to each of its three faces."""
    charge = np.zeros(g.f, dtype=np.int64)
    incident = [face_id for v in coloring.white_vertices() for face_id in g.faces_of_vertex(v)]
    if incident:
        np.add.at(charge, np.asarray(incident, dtype=np.int64), FACE_SHARE)
    return ChargeLedger(charge, WHITE_VERTEX_CHARGE * coloring.white_count)


def _match_rule(g: FullereneGraph, c: CycleState, face_id: int, i: int) -> Rule | None:
    face = g.faces[face_id]
    before = c.contains_edge(*face.edge(i - 1))
    middle = c.contains_edge(*face.edge(i))
    after = c.contains_edge(*face.edge(i + 1))
    if not middle:
        return None
    if before and after:
        return Rule.A
    if not before and not after:
        return Rule.B
    return None


def match_rules(g: FullereneGraph, c: CycleState, coloring: FaceColoring) -> List[RuleApplication]:
    """Every (receiver, boundary edge, rule) whose premise holds, read from the cycle and colors only."""
    matches: List[RuleApplication] = []
    for face in g.faces:
        if face.size != 6 or coloring.face_class[face.id] is not FaceClass.BLACK:
            continue
        for i in range(face.size):
            donor = g.face_across(face.id, i)
            if coloring.face_class[donor] is not FaceClass.WHITE:
                continue
            rule = _match_rule(g, c, face.id, i)
            if rule is not None:
                matches.append(RuleApplication(rule, donor, face.id, i, RULE_AMOUNTS[rule]))

    for app in matches:
        receiver = g.faces[app.receiver]
        if receiver.size != 6 or coloring.face_class[app.receiver] is not FaceClass.BLACK:
            raise InternalConsistencyError(f"Rule {app.rule.value} matched on face {app.receiver}, which is not a black hexagon")
        if coloring.face_class[app.donor] is not FaceClass.WHITE:
            raise InternalConsistencyError(f"Rule {app.rule.value} donor {app.donor} is not a white face")
    return matches


def apply_rules(g: FullereneGraph, c: CycleState, coloring: FaceColoring, ledger: ChargeLedger) -> ChargeLedger:
    """Apply every matching transfer at once; the input ledger is left untouched."""
    matches = match_rules(g, c, coloring)
    result = ledger.copy()
    if matches:
        donors = np.asarray([m.donor for m in matches], dtype=np.int64)
        receivers = np.asarray([m.receiver for m in matches], dtype=np.int64)
        amounts = np.asarray([m.amount for m in matches], dtype=np.int64)
        np.subtract.at(result.face_charge, donors, amounts)
        np.add.at(result.face_charge, receivers, amounts)
    result.rule_log.extend(matches)
    logger.debug(f"Applied {len(matches)} transfers ({sum(m.rule is Rule.A for m in matches)} A, "
                 f"{sum(m.rule is Rule.B for m in matches)} B)")
    return result


def receipts(ledger: ChargeLedger) -> Dict[int, str]:
    """Receiver face -> sorted signature of the rules it received by, e.g. "AB"."""
    received: Dict[int, List[str]] = defaultdict(list)
    for app in ledger.rule_log:
        received[app.receiver].append(app.rule.value)
    return {face_id: "".join(sorted(rules)) for face_id, rules in sorted(received.items())}


def white_hexagon_kind(g: FullereneGraph, c: CycleState, face_id: int) -> str:
    """parallel: two opposite cycle edges; path: three consecutive; split: two with one gap."""
    face = g.faces[face_id]
    on_cycle = [i for i in range(face.size) if c.contains_edge(*face.edge(i))]
    if len(on_cycle) == 3:
        return "path"
    if len(on_cycle) == 2:
        gap = (on_cycle[1] - on_cycle[0]) % face.size
        gap = min(gap, face.size - gap)
        if gap == 3:
            return "parallel"
        if gap == 2:
            return "split"
    return "other"


def _region(g: FullereneGraph, face_id: int) -> Tuple[int, ...]:
    return tuple(sorted({face_id, *g.faces[face_id].neighbors}))


def audit_final(
    g: FullereneGraph,
    c: CycleState,
    coloring: FaceColoring,
    ledger: ChargeLedger,
    longest_claim: bool,
) -> AuditReport:
    charges = ledger.charges()
    over_limit = [i for i, q in enumerate(charges) if q > FACE_CHARGE_LIMIT]
    white_faces = coloring.faces_of_class(FaceClass.WHITE)
    white_violations = [i for i in white_faces if charges[i] != WHITE_FACE_FINAL] if longest_claim else []

    signatures = receipts(ledger)
    report = AuditReport(
        longest_claim=longest_claim,
        total_initial=ledger.total_initial,
        total_final=ledger.total,
        face_charges=charges,
        over_limit=over_limit,
        white_violations=white_violations,
        white_kinds={i: white_hexagon_kind(g, c, i) for i in white_faces if g.faces[i].size == 6},
        overloads={i: signatures[i] for i in over_limit if i in signatures},
        witness_regions=[_region(g, i) for i in sorted(set(over_limit) | set(white_violations))],
    )

    if not report.conserved:
        logger.error(f"Charge not conserved: initial {report.total_initial}, final {report.total_final} half-units")
    for i in over_limit:
        logger.debug(f"Face {i} ends with {format_units(charges[i])} units ({signatures.get(i, 'initial')})")
    return report


def theorem_length_bound(n: int) -> int:
    """Least integer at least 5n/6 - 2/3."""
    return math.ceil(Fraction(5 * n, 6) - Fraction(2, 3))


def reference_bounds(n: int) -> Dict[str, int]:
    return {
        "n/3": math.ceil(Fraction(n, 3)),
        "3n/4": math.ceil(Fraction(3 * n, 4)),
        "4n/5": math.ceil(Fraction(4 * n, 5)),
    }


def derive_bound(g: FullereneGraph, audit: AuditReport) -> BoundReport:
    if not audit.longest_claim:
        raise AuditRefusalError("Bound derivation needs an audit of a cycle claimed to be longest")
    if not audit.passed:
        raise AuditRefusalError("Bound derivation refused: the final-charge audit failed")

    n, f = g.n, g.f
    w, rest = divmod(audit.total_initial, WHITE_VERTEX_CHARGE)
    if rest:
        raise InternalConsistencyError(f"Initial charge {audit.total_initial} is not a multiple of {WHITE_VERTEX_CHARGE}")
    total_cap = FACE_CHARGE_LIMIT * f
    if audit.total_final > total_cap:
        raise InternalConsistencyError(f"Final charge {audit.total_final} exceeds {total_cap} on a passed audit")

    w_max = f // 3
    derived = n - w_max
    bound = theorem_length_bound(n)
    chain = (
        f"6w = {6 * w} = sum of final charges <= 2f = {total_cap} (half-units)",
        f"w <= floor(f/3) = {w_max}",
        f"f = n/2 + 2 = {f}",
        f"length >= n - floor(f/3) = {derived} >= ceil(5n/6 - 2/3) = {bound}",
    )
    return BoundReport(
        n=n,
        f=f,
        w=w,
        w_max=w_max,
        derived_length=derived,
        theorem_bound=bound,
        cycle_length=n - w,
        reference_bounds=reference_bounds(n),
        chain=chain,
    )
