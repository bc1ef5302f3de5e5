"""Core datatypes for cycle search, classification, discharging and rerouting."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, ClassVar, Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from ..config import DEFAULT_NODE_LIMIT, DEFAULT_TIME_LIMIT
from ..exceptions import ConfigurationError
from ..graphs.embedding import Edge, edge_key


@dataclass(frozen=True)
class CycleState:
    order: Tuple[int, ...]
    edge_set: FrozenSet[Edge]
    vertex_set: FrozenSet[int]

    EMPTY: ClassVar["CycleState"]

    @classmethod
    def from_order(cls, order: Sequence[int]) -> "CycleState":
        seq = tuple(order)
        k = len(seq)
        if k < 3:
            return cls((), frozenset(), frozenset())
        edges = frozenset(edge_key(seq[i], seq[(i + 1) % k]) for i in range(k))
        return cls(seq, edges, frozenset(seq))

    @property
    def length(self) -> int:
        return len(self.order)

    @property
    def is_empty(self) -> bool:
        return not self.order

    def contains_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.edge_set

    def contains_vertex(self, v: int) -> bool:
        return v in self.vertex_set

    def canonical(self) -> "CycleState":
        """Rotate/reflect so the smallest vertex leads, followed by its smaller cycle neighbor."""
        if self.is_empty:
            return self
        seq = self.order
        k = len(seq)
        i = seq.index(min(seq))
        forward = seq[i:] + seq[:i]
        backward = (forward[0],) + tuple(reversed(forward[1:]))
        best = forward if forward[1] < backward[1] else backward
        return CycleState(best, self.edge_set, self.vertex_set)

    def to_dict(self) -> Dict[str, Any]:
        return {"length": self.length, "order": list(self.order)}


CycleState.EMPTY = CycleState((), frozenset(), frozenset())


@dataclass(frozen=True)
class SearchBudget:
    node_limit: int = DEFAULT_NODE_LIMIT
    time_limit: float = DEFAULT_TIME_LIMIT
    target_length: Optional[int] = None

    def __post_init__(self):
        errors = []
        if self.node_limit <= 0:
            errors.append(f"node_limit must be positive, got {self.node_limit}")
        if self.time_limit <= 0:
            errors.append(f"time_limit must be positive, got {self.time_limit}")
        if self.target_length is not None and self.target_length <= 0:
            errors.append(f"target_length must be positive, got {self.target_length}")
        if errors:
            raise ConfigurationError("Invalid search budget:\n" + "\n".join(f"  - {e}" for e in errors))


@dataclass(frozen=True)
class SearchResult:
    cycle: CycleState
    optimal: bool
    nodes: int
    elapsed_ms: float
    upper_bound: int

    @property
    def length(self) -> int:
        return self.cycle.length


class FaceClass(str, Enum):
    BLACK = "black"
    SINGLE = "single"
    WHITE = "white"
    OVERFULL = "overfull"


@dataclass(frozen=True)
class FaceColoring:
    white: Tuple[bool, ...]
    face_whites: Tuple[int, ...]
    face_class: Tuple[FaceClass, ...]

    @property
    def white_count(self) -> int:
        return sum(self.white)

    def is_white(self, v: int) -> bool:
        return self.white[v]

    def white_vertices(self) -> List[int]:
        return [v for v, w in enumerate(self.white) if w]

    def faces_of_class(self, cls: FaceClass) -> List[int]:
        return [i for i, c in enumerate(self.face_class) if c is cls]


@dataclass(frozen=True)
class TraversalPattern:
    face_id: int
    word: str
    canonical: str
    canonical_id: Optional[int]
    in_catalogue: bool
    lemma_consistent: bool


@dataclass(frozen=True)
class LemmaCheck:
    name: str
    passed: bool
    witness: Tuple[int, ...] = ()
    face_id: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        return {"passed": self.passed, "witness": list(self.witness), "face_id": self.face_id}


@dataclass(frozen=True)
class LemmaSuite:
    no_white_p3: LemmaCheck
    no_white_pentagon: LemmaCheck
    max_two_whites: LemmaCheck

    @property
    def ok(self) -> bool:
        return self.no_white_p3.passed and self.no_white_pentagon.passed and self.max_two_whites.passed

    def witness_faces(self) -> List[int]:
        return [c.face_id for c in (self.no_white_p3, self.no_white_pentagon, self.max_two_whites)
                if not c.passed and c.face_id is not None]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "no_white_p3": self.no_white_p3.to_dict(),
            "no_white_pentagon": self.no_white_pentagon.to_dict(),
            "max_two_whites": self.max_two_whites.to_dict(),
        }


class Rule(str, Enum):
    A = "A"
    B = "B"


@dataclass(frozen=True)
class RuleApplication:
    rule: Rule
    donor: int
    receiver: int
    edge_index: int
    amount: int  # half-units


@dataclass
class ChargeLedger:
    face_charge: np.ndarray
    total_initial: int
    rule_log: List[RuleApplication] = field(default_factory=list)

    @property
    def total(self) -> int:
        return int(self.face_charge.sum())

    def copy(self) -> "ChargeLedger":
        return ChargeLedger(self.face_charge.copy(), self.total_initial, list(self.rule_log))

    def charges(self) -> List[int]:
        return [int(x) for x in self.face_charge]


class MoveKind(str, Enum):
    SEGMENT_SWAP = "segment_swap"
    BOUNDED_LOCAL = "bounded_local"


@dataclass(frozen=True)
class RerouteMove:
    kind: MoveKind
    region: Tuple[int, ...]
    removed: FrozenSet[Edge]
    added: FrozenSet[Edge]
    delta: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "region": list(self.region),
            "removed": sorted(list(e) for e in self.removed),
            "added": sorted(list(e) for e in self.added),
            "delta": self.delta,
        }


@dataclass
class AuditReport:
    longest_claim: bool
    total_initial: int
    total_final: int
    face_charges: List[int]
    over_limit: List[int]
    white_violations: List[int]
    white_kinds: Dict[int, str] = field(default_factory=dict)
    overloads: Dict[int, str] = field(default_factory=dict)
    witness_regions: List[Tuple[int, ...]] = field(default_factory=list)

    @property
    def conserved(self) -> bool:
        return self.total_initial == self.total_final

    @property
    def max_charge(self) -> int:
        return max(self.face_charges) if self.face_charges else 0

    @property
    def passed(self) -> bool:
        if not self.conserved:
            return False
        if self.longest_claim:
            return not self.over_limit and not self.white_violations
        return True

    def to_dict(self) -> Dict[str, Any]:
        return {
            "longest_claim": self.longest_claim,
            "passed": self.passed,
            "conserved": self.conserved,
            "total_initial_halfunits": self.total_initial,
            "total_final_halfunits": self.total_final,
            "max_charge_halfunits": self.max_charge,
            "face_charges_halfunits": {str(i): c for i, c in enumerate(self.face_charges)},
            "over_limit": self.over_limit,
            "white_violations": self.white_violations,
            "white_kinds": {str(k): v for k, v in self.white_kinds.items()},
            "overloads": {str(k): v for k, v in self.overloads.items()},
            "witness_regions": [list(r) for r in self.witness_regions],
        }


@dataclass(frozen=True)
class BoundReport:
    n: int
    f: int
    w: int
    w_max: int
    derived_length: int
    theorem_bound: int
    cycle_length: int
    reference_bounds: Dict[str, int]
    chain: Tuple[str, ...]

    @property
    def satisfied(self) -> bool:
        return self.cycle_length >= self.theorem_bound

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "f": self.f,
            "w": self.w,
            "w_max": self.w_max,
            "derived_length": self.derived_length,
            "theorem_bound": self.theorem_bound,
            "cycle_length": self.cycle_length,
            "satisfied": self.satisfied,
            "reference_bounds": dict(self.reference_bounds),
            "chain": list(self.chain),
        }
