"""Reduct decisions, search, comparison maps and FCA/RST interdefinability"""

from .comparison import ComparisonMapTag, IsoEvidence, comparison_map, verify_iso_via_maps
from .crisp import classical_attribute_reducible, classical_object_reducible
from .reducibility import (
    ATTRIBUTES,
    OBJECTS,
    SideCheck,
    SideChecker,
    fca_attr_side_reducible,
    fca_object_side_reducible,
    resolve_method,
    rst_attr_side_reducible,
    rst_object_side_reducible,
)
from .report import ReductReport
from .reducts import is_fca_reduct, is_reduct, is_rst_reduct
from .search import MonotonicityViolation, ReductSearchResult, search_reducts
from .theorem import (
    Disagreement,
    InterdefinabilityReport,
    SamplerConfig,
    compare_context,
    counterexample_context,
    verify_interdefinability,
)

__all__ = [
    "ATTRIBUTES",
    "OBJECTS",
    "ComparisonMapTag",
    "Disagreement",
    "InterdefinabilityReport",
    "IsoEvidence",
    "MonotonicityViolation",
    "ReductReport",
    "ReductSearchResult",
    "SamplerConfig",
    "SideCheck",
    "SideChecker",
    "classical_attribute_reducible",
    "classical_object_reducible",
    "compare_context",
    "comparison_map",
    "counterexample_context",
    "fca_attr_side_reducible",
    "fca_object_side_reducible",
    "is_fca_reduct",
    "is_reduct",
    "is_rst_reduct",
    "resolve_method",
    "rst_attr_side_reducible",
    "rst_object_side_reducible",
    "search_reducts",
    "verify_interdefinability",
]
