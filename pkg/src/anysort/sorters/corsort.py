"""Corsort: pick the next comparison from the partial order itself.

The next pair is the incomparable pair whose descendant-minus-ancestor scores
are closest, tie-broken by the least acquired information max(I(i), I(j)),
then by smallest index pair.  Selection exploits that two comparable elements
always differ by at least 2 in their delta score, so any pair at delta
distance 0 or 1 is automatically incomparable and can be found by bucketing
instead of scanning all n^2 pairs.
"""

from __future__ import annotations

import numpy as np

from ..errors import SortStateError
from ..order import OrderMatrix
from .base import AlgoState, PendingPair, Schedule

_INF = np.iinfo(np.int32).max


def _within_group(group: np.ndarray, info: np.ndarray) -> tuple[int, int, int]:
    """Best (maxI, i, j) over pairs inside one equal-delta group (>= 2 items)."""
    gi = info[group]
    best_max = int(np.partition(gi, 1)[1])  # second-smallest I
    cand = group[gi <= best_max]
    first = int(cand[0])
    if info[first] == best_max:
        second = int(cand[1])
    else:
        second = int(cand[info[cand] == best_max][0])
    return best_max, first, second


def _across_groups(
    g1: np.ndarray, g2: np.ndarray, info: np.ndarray
) -> tuple[int, int, int]:
    """Best (maxI, i, j) over pairs spanning two adjacent-delta groups."""
    best_max = int(max(info[g1].min(), info[g2].min()))
    xs = g1[info[g1] <= best_max]
    ys = g2[info[g2] <= best_max]
    min_y = int(ys[0])
    at_y = ys[info[ys] == best_max]
    min_y_at = int(at_y[0]) if len(at_y) else None
    min_x = int(xs[0])
    at_x = xs[info[xs] == best_max]
    min_x_at = int(at_x[0]) if len(at_x) else None
    best: tuple[int, int] | None = None
    for u in xs.tolist():
        w = min_y if info[u] == best_max else min_y_at
        if w is None:
            continue
        pair = (u, w) if u < w else (w, u)
        if best is None or pair < best:
            best = pair
    for u in ys.tolist():
        w = min_x if info[u] == best_max else min_x_at
        if w is None:
            continue
        pair = (u, w) if u < w else (w, u)
        if best is None or pair < best:
            best = pair
    assert best is not None
    return best_max, best[0], best[1]


def _full_scan(m: OrderMatrix, delta: np.ndarray, info: np.ndarray) -> PendingPair:
    """O(n^2) masked scan, needed only when no pair is within delta-distance 1."""
    n = m.n
    valid = np.triu(m.m == 0, k=1)
    diff = np.abs(delta[:, None] - delta[None, :]).astype(np.int32)
    diff[~valid] = _INF
    g = diff.min()
    if g == _INF:
        raise SortStateError("the order is already total")
    tie = np.maximum(info[:, None], info[None, :]).astype(np.int32)
    tie[diff != g] = _INF
    flat = int(tie.argmin())
    i, j = divmod(flat, n)
    return PendingPair(i, j)


def corsort_select(m: OrderMatrix) -> PendingPair:
    """Deterministic argmin over incomparable pairs of
    (|delta(i) - delta(j)|, max(I(i), I(j)), i, j)."""
    if m.is_total():
        raise SortStateError("the order is already total")
    delta = m.d - m.a
    info = m.d + m.a
    order = np.argsort(delta, kind="stable")  # equal deltas keep index order
    ds = delta[order]
    gaps = np.diff(ds)
    min_gap = int(gaps.min()) if len(gaps) else _INF
    if min_gap > 1:
        return _full_scan(m, delta, info)
    # group boundaries over the sorted delta values
    cuts = np.flatnonzero(gaps) + 1
    groups = np.split(order, cuts)
    candidates: list[tuple[int, int, int]] = []
    if min_gap == 0:
        for grp in groups:
            if len(grp) >= 2:
                candidates.append(_within_group(grp, info))
    else:
        for g1, g2 in zip(groups, groups[1:]):
            if delta[g2[0]] - delta[g1[0]] == 1:
                candidates.append(_across_groups(g1, g2, info))
    _, i, j = min(candidates)
    return PendingPair(i, j)


def corsort(state: AlgoState) -> Schedule:
    matrix = OrderMatrix(state.n)
    state.matrix = matrix
    while not matrix.is_total():
        i, j = corsort_select(matrix)
        i_less = yield (i, j)
        if i_less:
            matrix.insert(i, j)
        else:
            matrix.insert(j, i)
