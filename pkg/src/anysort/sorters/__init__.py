"""Interruptible sorting algorithms behind a single stepwise interface."""

from __future__ import annotations

from .base import (
    AlgoState,
    PendingPair,
    Schedule,
    Sorter,
    replay_outcomes,
    run_to_completion,
)
from .corsort import corsort, corsort_select
from .heapshell import heapsort, shell_gaps, shellsort
from .insertion import binary_insertion, ford_johnson
from .merges import bottomup_merge, multizip, topdown_merge
from .quick import asort, quicksort

SCHEDULES = {
    "topdown_merge": topdown_merge,
    "bottomup_merge": bottomup_merge,
    "multizip": multizip,
    "quicksort": quicksort,
    "asort": asort,
    "binary_insertion": binary_insertion,
    "ford_johnson": ford_johnson,
    "heapsort": heapsort,
    "shellsort": shellsort,
    "corsort": corsort,
}

ALGORITHMS = tuple(SCHEDULES)


def make_sorter(algorithm: str, n: int) -> Sorter:
    """Fresh stepwise sorter over items 0..n-1."""
    try:
        factory = SCHEDULES[algorithm]
    except KeyError:
        raise ValueError(
            f"unknown algorithm {algorithm!r}; choose from {', '.join(ALGORITHMS)}"
        ) from None
    return Sorter(algorithm, n, factory)


__all__ = [
    "ALGORITHMS",
    "AlgoState",
    "PendingPair",
    "Schedule",
    "SCHEDULES",
    "Sorter",
    "corsort_select",
    "make_sorter",
    "replay_outcomes",
    "run_to_completion",
    "shell_gaps",
]
