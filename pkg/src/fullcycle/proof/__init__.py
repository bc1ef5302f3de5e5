"""Longest cycles, their classification, discharging and rerouting."""

from .classify import (
    check_max_two_whites_per_face,
    check_no_white_p3,
    check_no_white_pentagon,
    classify_pattern,
    color,
    pattern_catalogue,
    run_lemma_checks,
)
from .datamodel import CycleState, FaceClass, FaceColoring, SearchBudget, SearchResult
from .discharge import apply_rules, audit_final, derive_bound, initial_charges, theorem_length_bound
from .engine import oracle_check, verify_corpus, verify_instance
from .reroute import apply_move, bounded_local_reroute, face_segment_swap, improve_until_stable
from .search import brute_force_longest_cycle, heuristic_long_cycle, longest_cycle_exact, verify_cycle

__all__ = [
    "check_max_two_whites_per_face",
    "check_no_white_p3",
    "check_no_white_pentagon",
    "classify_pattern",
    "color",
    "pattern_catalogue",
    "run_lemma_checks",
    "CycleState",
    "FaceClass",
    "FaceColoring",
    "SearchBudget",
    "SearchResult",
    "apply_rules",
    "audit_final",
    "derive_bound",
    "initial_charges",
    "theorem_length_bound",
    "oracle_check",
    "verify_corpus",
    "verify_instance",
    "apply_move",
    "bounded_local_reroute",
    "face_segment_swap",
    "improve_until_stable",
    "brute_force_longest_cycle",
    "heuristic_long_cycle",
    "longest_cycle_exact",
    "verify_cycle",
]
