"""Binary insertion sort and Ford-Johnson (merge-insertion) sort."""

from __future__ import annotations

from .base import AlgoState, Schedule


def _binary_insert(chain: list[int], x: int, hi: int) -> Schedule:
    """Insert x into the sorted chain[0:hi] by binary search (lower midpoint,
    leftmost insertion point)."""
    lo = 0
    while lo < hi:
        mid = (lo + hi) // 2
        x_less = yield (x, chain[mid])
        if x_less:
            hi = mid
        else:
            lo = mid + 1
    chain.insert(lo, x)


def binary_insertion(state: AlgoState) -> Schedule:
    """Insert elements left to right into a growing sorted prefix."""
    original = list(range(state.n))
    prefix: list[int] = original[:1]
    state.estimate_fn = lambda: list(state.items)
    for i in range(1, state.n):
        yield from _binary_insert(prefix, original[i], len(prefix))
        state.items = prefix + original[i + 1 :]


# Jacobsthal-like insertion thresholds 1, 3, 5, 11, 21, 43, ...: each batch
# ends where the binary-search region is a full 2^k - 1 elements.
def _next_threshold(prev: int, cur: int) -> int:
    return cur + 2 * prev


def ford_johnson(state: AlgoState) -> Schedule:
    """Classic merge-insertion; no native estimator."""

    def rec(seq: list[int]) -> Schedule:
        if len(seq) <= 1:
            return list(seq)
        winners: list[int] = []
        loser_of: dict[int, int] = {}
        for k in range(0, len(seq) - 1, 2):
            x, y = seq[k], seq[k + 1]
            x_less = yield (x, y)
            w, l = (y, x) if x_less else (x, y)
            winners.append(w)
            loser_of[w] = l
        straggler = seq[-1] if len(seq) % 2 else None
        sorted_winners = yield from rec(winners)
        chain = [loser_of[sorted_winners[0]]] + sorted_winners
        # (element, partner) for a_2..a_m, plus the straggler with no partner;
        # a_i must end up somewhere before its partner b_i in the chain
        pend: list[tuple[int, int | None]] = [
            (loser_of[w], w) for w in sorted_winners[1:]
        ]
        if straggler is not None:
            pend.append((straggler, None))
        last = len(pend) + 1  # largest a-index
        prev_t, cur_t = 1, 3
        while prev_t < last:
            top = min(cur_t, last)
            for ai in range(top, prev_t, -1):  # descending within the batch
                x, partner = pend[ai - 2]
                bound = len(chain) if partner is None else chain.index(partner)
                yield from _binary_insert(chain, x, bound)
            prev_t, cur_t = top, _next_threshold(prev_t, cur_t)
        return chain

    yield from rec(list(range(state.n)))
