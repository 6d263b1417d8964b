"""Antimagic labelings of caterpillars."""

from .errors import (
    InvalidTreeError,
    InvariantViolation,
    LabelingError,
    NotACaterpillarError,
    OracleBudgetExceeded,
    OracleLimitError,
    ParseError,
)
from .generator import enumerate_caterpillars, random_caterpillar
from .labeler import LabelingResult, closed_form_pathedge_label, label, split_labels
from .oracle import brute_force_antimagic, compare_with_algorithm
from .orientation import orient_and_label, verify_oriented_sums
from .tree import Spine, Tree, bipartition, extract_spine, is_caterpillar, parse_edge_list
from .verifier import check_intervals, classify_vertices, is_antimagic_labeling, vertex_sums

__all__ = [
    "InvalidTreeError",
    "InvariantViolation",
    "LabelingError",
    "LabelingResult",
    "NotACaterpillarError",
    "OracleBudgetExceeded",
    "OracleLimitError",
    "ParseError",
    "Spine",
    "Tree",
    "bipartition",
    "brute_force_antimagic",
    "check_intervals",
    "classify_vertices",
    "closed_form_pathedge_label",
    "compare_with_algorithm",
    "enumerate_caterpillars",
    "extract_spine",
    "is_antimagic_labeling",
    "is_caterpillar",
    "label",
    "orient_and_label",
    "parse_edge_list",
    "random_caterpillar",
    "split_labels",
    "vertex_sums",
    "verify_oriented_sums",
]
