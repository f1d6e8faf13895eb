"""Deterministic self-checks against frozen reference executions.

Each check replays a small worked example whose expected outcome is frozen
here, and reports pass/fail with a diff on mismatch.  These are the same
fixtures the acceptance tests assert; the CLI exposes them so a packaged
install can be validated without the test suite.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Sequence

from .extensions import count_linear_extensions, expected_footrule, median_rank_scores
from .metrics import footrule
from .order import OrderMatrix, compute_scores, score_and_sort
from .sorters import make_sorter

MERGE_INPUT = (5, 1, 8, 7, 2, 6, 4, 3)
MERGE_TRACES = {
    "topdown_merge": [
        (5, 1), (8, 7), (1, 7), (5, 7), (2, 6), (4, 3), (2, 3), (6, 3),
        (6, 4), (1, 2), (5, 2), (5, 3), (5, 4), (5, 6), (7, 6),
    ],
    "bottomup_merge": [
        (5, 1), (8, 7), (2, 6), (4, 3), (1, 7), (5, 7), (2, 3), (6, 3),
        (6, 4), (1, 2), (5, 2), (5, 3), (5, 4), (5, 6), (7, 6),
    ],
    "multizip": [
        (5, 1), (8, 7), (2, 6), (4, 3), (1, 7), (2, 3), (5, 7), (6, 3),
        (6, 4), (1, 2), (5, 2), (5, 3), (5, 4), (5, 6), (7, 6),
    ],
}

QUICK_INPUT = (3, 2, 4, 6, 7, 1, 5)
QUICK_TRACES = {
    "quicksort": [
        (3, 2), (3, 4), (3, 6), (3, 7), (3, 1), (3, 5), (2, 1), (4, 6),
        (4, 7), (4, 5), (6, 7), (6, 5),
    ],
    "asort": [
        (3, 2), (3, 4), (3, 6), (3, 7), (3, 1), (3, 5), (4, 6), (4, 7),
        (4, 5), (2, 1), (6, 7), (6, 5),
    ],
}

CORSORT_INPUT = (4, 2, 3, 1, 5)
# footrule error of the rho estimate after each of the 7 comparisons
CORSORT_ERRORS = [6, 6, 2, 2, 2, 2, 0]

# 17-element partial order: one 2-chain a<b, and a Y-shaped component
# c<d<...<n<o with a second branch n<p<q
POSET_LABELS = "abcdefghijklmnopq"
POSET_RELATIONS = (
    [("a", "b")]
    + list(zip("cdefghijklmn", "defghijklmno"))
    + [("n", "p"), ("p", "q")]
)
POSET_EXTENSION_COUNT = 408
POSET_EXPECTED = {
    "delta": ("cdefghiajbklmnpoq", 16.2),
    "rho": ("cdefgahijklbmnpoq", 14.0),
    "median_rank": ("cdefaghijklmbnpoq", 13.9),
}


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def drive_trace(algorithm: str, values: Sequence[int]) -> list[tuple[int, int]]:
    """Run an algorithm on a value list, answering from the values themselves;
    returns the compared value pairs in emission order."""
    sorter = make_sorter(algorithm, len(values))
    trace: list[tuple[int, int]] = []
    while (pair := sorter.next_pair()) is not None:
        less = pair.i if values[pair.i] < values[pair.j] else pair.j
        sorter.record_outcome(pair, less)
        trace.append((values[pair.i], values[pair.j]))
    return trace


def _check_traces(
    name: str, values: Sequence[int], expected: dict[str, list[tuple[int, int]]]
) -> CheckResult:
    problems = []
    multisets = []
    for algorithm, want in expected.items():
        got = drive_trace(algorithm, values)
        if got != want:
            problems.append(f"{algorithm}: expected {want}, got {got}")
        multisets.append(Counter(frozenset(p) for p in got))
    if any(m != multisets[0] for m in multisets):
        problems.append("comparison multisets differ between variants")
    return CheckResult(name, not problems, "; ".join(problems))


def check_merge_traces() -> CheckResult:
    return _check_traces("merge-traces", MERGE_INPUT, MERGE_TRACES)


def check_quick_traces() -> CheckResult:
    return _check_traces("quick-traces", QUICK_INPUT, QUICK_TRACES)


def check_corsort_trace() -> CheckResult:
    values = CORSORT_INPUT
    n = len(values)
    sorter = make_sorter("corsort", n)
    errors: list[int] = []
    while (pair := sorter.next_pair()) is not None:
        less = pair.i if values[pair.i] < values[pair.j] else pair.j
        sorter.record_outcome(pair, less)
        errors.append(footrule(sorter.rho_estimate(), values))
    if errors != CORSORT_ERRORS:
        return CheckResult(
            "corsort-trace", False,
            f"expected errors {CORSORT_ERRORS}, got {errors}",
        )
    return CheckResult("corsort-trace", True)


def poset_matrix() -> OrderMatrix:
    matrix = OrderMatrix(len(POSET_LABELS))
    for lo, hi in POSET_RELATIONS:
        matrix.insert(POSET_LABELS.index(lo), POSET_LABELS.index(hi))
    return matrix


def check_estimator_poset() -> CheckResult:
    matrix = poset_matrix()
    problems = []
    count = count_linear_extensions(matrix)
    if count != POSET_EXTENSION_COUNT:
        problems.append(
            f"expected {POSET_EXTENSION_COUNT} linear extensions, got {count}"
        )
    scores = compute_scores(matrix)
    by_name: dict[str, Sequence] = {
        "delta": scores.delta,
        "rho": scores.rho,
        "median_rank": median_rank_scores(matrix),
    }
    for name, (want_order, want_error) in POSET_EXPECTED.items():
        estimate = score_and_sort(by_name[name])
        got_order = "".join(POSET_LABELS[i] for i in estimate)
        if got_order != want_order:
            problems.append(f"{name}: expected order {want_order}, got {got_order}")
        mean_err = expected_footrule(matrix, estimate)
        if round(float(mean_err), 1) != want_error:
            problems.append(
                f"{name}: expected mean error {want_error}, got {float(mean_err):.3f}"
            )
    return CheckResult("estimator-poset", not problems, "; ".join(problems))


CHECKS: dict[str, Callable[[], CheckResult]] = {
    "merge-traces": check_merge_traces,
    "quick-traces": check_quick_traces,
    "corsort-trace": check_corsort_trace,
    "estimator-poset": check_estimator_poset,
}


def run_checks(only: Sequence[str] | None = None) -> list[CheckResult]:
    names = list(CHECKS) if not only else list(only)
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise ValueError(
            f"unknown checks: {', '.join(unknown)}; available: {', '.join(CHECKS)}"
        )
    return [CHECKS[name]() for name in names]
