"""Quicksort and ASort (quickselect-based anytime quicksort).

Both use the first element of the active range as pivot, so they perform the
same comparisons; ASort reorders them by locating segment medians first and
recursing breadth-first.  The working list moves an element in front of the
pivot as soon as it is found to be smaller, so interrupting mid-partition
already reflects everything learned.
"""

from __future__ import annotations

from collections import deque

from .base import AlgoState, Schedule


def _partition(state: AlgoState, lo: int, hi: int) -> Schedule:
    """Partition items[lo..hi] (inclusive) around items[lo].

    Returns (via StopIteration value) the pivot's final index.  Elements
    found smaller slide in front of the pivot in encounter order; larger
    ones keep their relative order behind it.
    """
    items = state.items
    pivot = items[lo]
    rest = items[lo + 1 : hi + 1]
    smaller: list[int] = []
    not_smaller: list[int] = list(rest)
    for x in rest:
        pivot_less = yield (pivot, x)
        if pivot_less:
            continue
        smaller.append(x)
        not_smaller.remove(x)
        items[lo : hi + 1] = smaller + [pivot] + not_smaller
    return lo + len(smaller)


def quicksort(state: AlgoState) -> Schedule:
    state.estimate_fn = lambda: list(state.items)

    def rec(lo: int, hi: int) -> Schedule:
        if hi <= lo:
            return
        q = yield from _partition(state, lo, hi)
        yield from rec(lo, q - 1)
        yield from rec(q + 1, hi)

    yield from rec(0, state.n - 1)


def asort(state: AlgoState) -> Schedule:
    """Find each segment's median via quickselect, then recurse on both
    halves in breadth-first order over recursion depth."""
    items = state.items
    n = state.n
    state.estimate_fn = lambda: list(items)
    placed = [False] * n  # by position: placed positions never move again
    queue: deque[tuple[int, int]] = deque([(0, n - 1)])
    while queue:
        lo, hi = queue.popleft()
        if lo > hi:
            continue
        target = (lo + hi) // 2
        while not placed[target]:
            # maximal run of unplaced positions around the target; previously
            # placed pivots partition the segment, so no comparison against
            # them is ever needed
            a = target
            while a > lo and not placed[a - 1]:
                a -= 1
            b = target
            while b < hi and not placed[b + 1]:
                b += 1
            if a == b:
                placed[target] = True
                break
            q = yield from _partition(state, a, b)
            placed[q] = True
        queue.append((lo, target - 1))
        queue.append((target + 1, hi))
