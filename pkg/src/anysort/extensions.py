"""Linear-extension enumeration and the estimators that need it.

Counting linear extensions is #P-complete, so everything here is guarded by
configurable size limits and intended for small instances (verification,
figures, property tests).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .errors import ResourceLimitError
from .order import OrderMatrix, is_linear_extension

DEFAULT_MAX_ELEMENTS = 20
DEFAULT_MAX_EXTENSIONS = 10**7


def enumerate_linear_extensions(
    m: OrderMatrix,
    *,
    max_elements: int = DEFAULT_MAX_ELEMENTS,
    max_extensions: int = DEFAULT_MAX_EXTENSIONS,
) -> Iterator[list[int]]:
    """Yield every total order compatible with ``m``, each exactly once.

    Backtracks over elements whose unplaced strict descendants are exhausted,
    in ascending index order, so the output sequence is deterministic.
    """
    n = m.n
    if n > max_elements:
        raise ResourceLimitError(
            f"{n} elements exceeds the enumeration limit of {max_elements}"
        )
    # strict descendants / ancestors as python lists for the hot loop
    succs = [np.flatnonzero((m.m[x] == 1)).tolist() for x in range(n)]
    for x in range(n):
        succs[x].remove(x)
    indeg = [int(m.d[x]) - 1 for x in range(n)]

    prefix: list[int] = []
    produced = 0

    def backtrack() -> Iterator[list[int]]:
        nonlocal produced
        if len(prefix) == n:
            produced += 1
            if produced > max_extensions:
                raise ResourceLimitError(
                    f"more than {max_extensions} linear extensions"
                )
            yield prefix.copy()
            return
        for x in range(n):
            if indeg[x] == 0:
                indeg[x] = -1
                prefix.append(x)
                for y in succs[x]:
                    indeg[y] -= 1
                yield from backtrack()
                prefix.pop()
                for y in succs[x]:
                    indeg[y] += 1
                indeg[x] = 0

    return backtrack()


def count_linear_extensions(m: OrderMatrix, **limits) -> int:
    return sum(1 for _ in enumerate_linear_extensions(m, **limits))


def median_rank_scores(m: OrderMatrix, **limits) -> list[int]:
    """Per-element lower median of its 1-based position over all extensions."""
    n = m.n
    counts = np.zeros((n, n), dtype=np.int64)  # counts[x, pos-1]
    total = 0
    for ext in enumerate_linear_extensions(m, **limits):
        total += 1
        for pos, x in enumerate(ext):
            counts[x, pos] += 1
    target = (total + 1) // 2  # lower median
    medians = []
    for x in range(n):
        cum = 0
        for pos in range(n):
            cum += counts[x, pos]
            if cum >= target:
                medians.append(pos + 1)
                break
    return medians


def expected_footrule(
    m: OrderMatrix, candidate: Sequence[int], **limits
) -> Fraction:
    """Mean footrule between ``candidate`` and a uniform linear extension."""
    if not is_linear_extension(m, candidate):
        raise ValueError("candidate is not a linear extension of the order")
    n = m.n
    cand_pos = [0] * n
    for pos, x in enumerate(candidate):
        cand_pos[x] = pos
    total = 0
    count = 0
    for ext in enumerate_linear_extensions(m, **limits):
        count += 1
        total += sum(abs(cand_pos[x] - pos) for pos, x in enumerate(ext))
    return Fraction(total, count)
