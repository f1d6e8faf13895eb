"""The mergesort family: top-down, bottom-up, and multizip scheduling.

All three perform the same comparisons on every input; they differ only in
the order.  The shared split rule puts ceil(size/2) elements in the left part,
so the merge trees coincide for every n (this is what makes the comparison
multisets equal).
"""

from __future__ import annotations

from .base import AlgoState, Schedule


def _merge(state: AlgoState, lo: int, mid: int, hi: int) -> Schedule:
    """Merge items[lo:mid] and items[mid:hi]; the working list is updated
    after every comparison so interruption mid-merge sees a partial merge."""
    items = state.items
    left = items[lo:mid]
    right = items[mid:hi]
    out: list[int] = []
    li = ri = 0
    while li < len(left) and ri < len(right):
        a, b = left[li], right[ri]
        a_less = yield (a, b)
        if a_less:
            out.append(a)
            li += 1
        else:
            out.append(b)
            ri += 1
        items[lo:hi] = out + left[li:] + right[ri:]
    items[lo:hi] = out + left[li:] + right[ri:]


def topdown_merge(state: AlgoState) -> Schedule:
    state.estimate_fn = lambda: list(state.items)

    def rec(lo: int, hi: int) -> Schedule:
        if hi - lo <= 1:
            return
        mid = lo + (hi - lo + 1) // 2
        yield from rec(lo, mid)
        yield from rec(mid, hi)
        yield from _merge(state, lo, mid, hi)

    yield from rec(0, state.n)


def _merge_levels(n: int) -> list[list[tuple[int, int, int]]]:
    """(lo, mid, hi) merge tasks grouped by tree depth, deepest level first."""
    levels: dict[int, list[tuple[int, int, int]]] = {}

    def rec(lo: int, hi: int, depth: int) -> None:
        if hi - lo <= 1:
            return
        mid = lo + (hi - lo + 1) // 2
        levels.setdefault(depth, []).append((lo, mid, hi))
        rec(lo, mid, depth + 1)
        rec(mid, hi, depth + 1)

    rec(0, n, 0)
    return [levels[d] for d in sorted(levels, reverse=True)]


def bottomup_merge(state: AlgoState) -> Schedule:
    state.estimate_fn = lambda: list(state.items)
    for level in _merge_levels(state.n):
        for lo, mid, hi in level:
            yield from _merge(state, lo, mid, hi)


def multizip(state: AlgoState) -> Schedule:
    """Bottom-up merging with all same-depth merges interleaved round-robin.

    Instead of closing one "zipper" (merge) at a time, every merge of the
    current tree depth advances by one comparison per round; merges whose
    input runs out are flushed when their turn comes.
    """
    items = state.items
    state.estimate_fn = lambda: list(items)
    for level in _merge_levels(state.n):
        merges = [
            {"out": [], "left": items[lo:mid], "right": items[mid:hi], "li": 0, "ri": 0}
            for lo, mid, hi in level
        ]

        def flush_view() -> None:
            # regions outside this level's tasks never move
            for (lo, _, hi), mg in zip(level, merges):
                items[lo:hi] = (
                    mg["out"] + mg["left"][mg["li"]:] + mg["right"][mg["ri"]:]
                )

        pending = set(range(len(level)))
        while pending:
            for idx in sorted(pending):
                mg = merges[idx]
                left, right = mg["left"], mg["right"]
                if mg["li"] >= len(left) or mg["ri"] >= len(right):
                    mg["out"].extend(left[mg["li"]:])
                    mg["out"].extend(right[mg["ri"]:])
                    mg["li"], mg["ri"] = len(left), len(right)
                    pending.discard(idx)
                else:
                    a, b = left[mg["li"]], right[mg["ri"]]
                    a_less = yield (a, b)
                    if a_less:
                        mg["out"].append(a)
                        mg["li"] += 1
                    else:
                        mg["out"].append(b)
                        mg["ri"] += 1
                flush_view()
