"""Spearman footrule distance between a tentative arrangement and the truth."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def validate_permutation(ranks: Sequence[int]) -> None:
    """Check that ``ranks`` is a bijection onto 1..n."""
    n = len(ranks)
    if n < 1:
        raise ValueError("permutation must have at least one element")
    if sorted(ranks) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {list(ranks)!r}")


def rank_distance(ranks_a: Sequence[int], ranks_b: Sequence[int]) -> int:
    """L1 distance between two rankings of the same items (symmetric)."""
    if len(ranks_a) != len(ranks_b):
        raise ValueError(
            f"rank sequences differ in length: {len(ranks_a)} vs {len(ranks_b)}"
        )
    return sum(abs(ra - rb) for ra, rb in zip(ranks_a, ranks_b))


def footrule(estimate: Sequence[int], truth: Sequence[int]) -> int:
    """Sum over positions of |true rank of the item placed there - position|.

    ``estimate`` lists item indices (0-based) in tentative ascending order;
    ``truth[i]`` is the true rank (1-based) of item ``i``.  Zero iff the
    estimate is the sorted order.
    """
    n = len(truth)
    if len(estimate) != n:
        raise ValueError(f"estimate has {len(estimate)} items, truth has {n}")
    est_ranks = [0] * n
    for pos, item in enumerate(estimate, start=1):
        est_ranks[item] = pos
    return rank_distance(est_ranks, truth)


def max_footrule(n: int) -> int:
    """Largest footrule value over all pairs of rankings: floor(n^2 / 2)."""
    return n * n // 2


def normalized_footrule(estimate: Sequence[int], truth: Sequence[int]) -> Fraction:
    """Footrule divided by the maximal distance floor(n^2/2); in [0, 1]."""
    n = len(truth)
    if n < 2:
        raise ValueError("normalization needs n >= 2 (zero denominator otherwise)")
    return Fraction(footrule(estimate, truth), max_footrule(n))
