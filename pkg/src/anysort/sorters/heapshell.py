"""Heapsort (Floyd build, max-heap) and Shellsort (Ciura gaps)."""

from __future__ import annotations

from .base import AlgoState, Schedule

CIURA_GAPS = (1, 4, 10, 23, 57, 132, 301, 701)
GAP_GROWTH = 2.25  # extension factor beyond the published sequence


def shell_gaps(n: int) -> list[int]:
    """Ciura's gap sequence restricted to gaps < n, largest first."""
    gaps = [g for g in CIURA_GAPS if g < n]
    while gaps and int(gaps[-1] * GAP_GROWTH) < n:
        gaps.append(int(gaps[-1] * GAP_GROWTH))
    return gaps[::-1]


def shellsort(state: AlgoState) -> Schedule:
    arr = state.items
    n = state.n
    state.estimate_fn = lambda: list(arr)
    for gap in shell_gaps(n):
        for i in range(gap, n):
            j = i
            while True:
                # j - gap wraps below zero, mirroring the common Python
                # formulation `while arr[j] < arr[j - gap] and j >= gap`:
                # a key that reaches the front of its chain still costs one
                # comparison (against the wrapped element) before stopping
                prev_less = yield (arr[j - gap], arr[j])
                if prev_less or j < gap:
                    break
                arr[j - gap], arr[j] = arr[j], arr[j - gap]
                j -= gap


def heapsort(state: AlgoState) -> Schedule:
    arr = state.items
    n = state.n
    heap_size = {"h": n}
    # estimate: walk the heap region backwards (roughly descending), then the
    # already-sorted tail forwards
    state.estimate_fn = lambda: arr[: heap_size["h"]][::-1] + arr[heap_size["h"] :]

    def sift_down(root: int, end: int) -> Schedule:
        while True:
            child = 2 * root + 1
            if child >= end:
                return
            if child + 1 < end:
                left_less = yield (arr[child], arr[child + 1])
                if left_less:
                    child += 1
            root_less = yield (arr[root], arr[child])
            if not root_less:
                return
            arr[root], arr[child] = arr[child], arr[root]
            root = child

    for root in range(n // 2 - 1, -1, -1):
        yield from sift_down(root, n)
    for end in range(n - 1, 0, -1):
        arr[0], arr[end] = arr[end], arr[0]
        heap_size["h"] = end
        yield from sift_down(0, end)
    heap_size["h"] = 0
