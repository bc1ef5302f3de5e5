"""Structural validation of fullerene graphs. Failures are reported, never raised."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List

import networkx as nx

from ..config import ALLOWED_FACE_SIZES, MIN_FULLERENE_ORDER, PENTAGON_COUNT
from .embedding import FullereneGraph

CHECK_NAMES = (
    "order",
    "cubic",
    "symmetric",
    "dart_partition",
    "face_sizes",
    "twelve_pentagons",
    "euler",
    "three_connected",
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class ValidationReport:
    graph_name: str
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed_names(self) -> List[str]:
        return [c.name for c in self.checks if not c.passed]

    def get(self, name: str) -> CheckResult:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "graph_id": self.graph_name,
            "ok": self.ok,
            "checks": {c.name: {"passed": c.passed, "detail": c.detail} for c in self.checks},
        }


def _check_three_connected(g: FullereneGraph) -> CheckResult:
    G = g.to_networkx()
    if not nx.is_connected(G):
        return CheckResult("three_connected", False, "graph is disconnected")
    k = nx.node_connectivity(G)
    if k >= 3:
        return CheckResult("three_connected", True, f"node connectivity {k}")
    cut = sorted(nx.minimum_node_cut(G))
    return CheckResult("three_connected", False, f"vertex cut {cut} of size {len(cut)}")


def validate_fullerene(g: FullereneGraph) -> ValidationReport:
    """Run every structural check on g and collect the verdicts."""
    report = ValidationReport(g.name)
    add = report.checks.append
    n = g.n

    order_ok = n >= MIN_FULLERENE_ORDER and n % 2 == 0
    add(CheckResult("order", order_ok, f"n={n}" + ("" if order_ok else f" (need even n >= {MIN_FULLERENE_ORDER})")))

    bad_degree = [v for v, nbrs in enumerate(g.rotation) if len(nbrs) != 3]
    add(CheckResult("cubic", not bad_degree, f"vertices with degree != 3: {bad_degree[:10]}" if bad_degree else ""))

    asym = [(v, u) for v, nbrs in enumerate(g.rotation) for u in nbrs if v not in g.rotation[u]]
    add(CheckResult("symmetric", not asym, f"unmatched darts: {asym[:10]}" if asym else ""))

    darts_on_faces = sum(face.size for face in g.faces)
    total_darts = sum(len(nbrs) for nbrs in g.rotation)
    seen = {(face.vertex(i), face.vertex(i + 1)) for face in g.faces for i in range(face.size)}
    partition_ok = darts_on_faces == total_darts == len(seen)
    add(CheckResult("dart_partition", partition_ok, f"{darts_on_faces} boundary darts, {total_darts} darts"))

    odd_faces = [face.id for face in g.faces if face.size not in ALLOWED_FACE_SIZES]
    add(CheckResult(
        "face_sizes",
        not odd_faces,
        f"faces with size outside {ALLOWED_FACE_SIZES}: {odd_faces}" if odd_faces else "",
    ))

    pentagons = g.pentagon_count
    add(CheckResult("twelve_pentagons", pentagons == PENTAGON_COUNT, f"{pentagons} pentagons"))

    euler_ok = 2 * g.f == n + 4
    add(CheckResult("euler", euler_ok, f"f={g.f}, n/2+2={n / 2 + 2:g}"))

    add(_check_three_connected(g))
    return report


def has_adjacent_pentagons(g: FullereneGraph) -> bool:
    """True when two pentagonal faces share an edge."""
    for face in g.faces:
        if face.size != 5:
            continue
        if any(g.faces[other].size == 5 for other in face.neighbors):
            return True
    return False

