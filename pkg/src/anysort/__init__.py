"""Anytime comparison sorting: estimators, interruptible algorithms, benchmarks."""

from .errors import (
    AnysortError,
    InconsistentOrderError,
    NativeEstimateUnavailable,
    ResourceLimitError,
    SortStateError,
)
from .extensions import (
    count_linear_extensions,
    enumerate_linear_extensions,
    expected_footrule,
    median_rank_scores,
)
from .metrics import footrule, max_footrule, normalized_footrule, rank_distance
from .order import (
    ComparisonRecord,
    OrderMatrix,
    ScoreSet,
    closure_from_history,
    closure_insert,
    compute_scores,
    is_linear_extension,
    score_and_sort,
)
from .sorters import (
    ALGORITHMS,
    PendingPair,
    Sorter,
    corsort_select,
    make_sorter,
    run_to_completion,
)

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS",
    "AnysortError",
    "ComparisonRecord",
    "InconsistentOrderError",
    "NativeEstimateUnavailable",
    "OrderMatrix",
    "PendingPair",
    "ResourceLimitError",
    "ScoreSet",
    "SortStateError",
    "Sorter",
    "closure_from_history",
    "closure_insert",
    "compute_scores",
    "corsort_select",
    "count_linear_extensions",
    "enumerate_linear_extensions",
    "expected_footrule",
    "footrule",
    "is_linear_extension",
    "make_sorter",
    "max_footrule",
    "median_rank_scores",
    "normalized_footrule",
    "rank_distance",
    "run_to_completion",
    "score_and_sort",
]
