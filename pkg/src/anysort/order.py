"""Partial-order bookkeeping: comparison records, the relation matrix, and scores.

The relation matrix keeps, for every ordered pair ``(k, l)``, one of three
values: ``+1`` when ``k`` is known to be less than or equal to ``l``, ``-1``
when it is known to be greater, and ``0`` when the pair is still incomparable.
The matrix is transitively closed after every update, so descendant/ancestor
counts are plain column/row sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

from .errors import InconsistentOrderError


class ComparisonRecord(NamedTuple):
    """One answered comparison: item ``lo`` is strictly less than item ``hi``."""

    lo: int
    hi: int


class OrderMatrix:
    """Dense n x n partial-order relation, kept transitively closed.

    ``entry(i, j) == +1`` means item i precedes item j (i is a descendant of
    j), ``-1`` the opposite, ``0`` incomparable.  The diagonal is ``+1``.
    Descendant counts ``d`` (column sums of +1) and ancestor counts ``a``
    (row sums of +1) are maintained incrementally; each holds the element
    itself, so they start at 1.
    """

    __slots__ = ("n", "m", "d", "a", "_known")

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"need at least one element, got n={n}")
        self.n = n
        self.m = np.zeros((n, n), dtype=np.int8)
        np.fill_diagonal(self.m, 1)
        self.d = np.ones(n, dtype=np.int64)
        self.a = np.ones(n, dtype=np.int64)
        # number of comparable ordered pairs (i != j, entry +1); the order is
        # total once this reaches n*(n-1)/2.
        self._known = 0

    @classmethod
    def from_history(cls, history: Iterable[ComparisonRecord], n: int) -> "OrderMatrix":
        """Fold a consistent comparison history into a closed matrix."""
        mat = cls(n)
        for rec in history:
            mat.insert(rec[0], rec[1])
        return mat

    def copy(self) -> "OrderMatrix":
        other = OrderMatrix.__new__(OrderMatrix)
        other.n = self.n
        other.m = self.m.copy()
        other.d = self.d.copy()
        other.a = self.a.copy()
        other._known = self._known
        return other

    def entry(self, i: int, j: int) -> int:
        return int(self.m[i, j])

    def comparable(self, i: int, j: int) -> bool:
        return self.m[i, j] != 0

    def is_total(self) -> bool:
        return self._known == self.n * (self.n - 1) // 2

    def incomparable_pairs(self) -> Iterator[tuple[int, int]]:
        """All unordered pairs (i < j) not yet related."""
        ii, jj = np.nonzero(np.triu(self.m == 0, k=1))
        return zip(ii.tolist(), jj.tolist())

    def insert(self, lo: int, hi: int) -> "OrderMatrix":
        """Record ``lo < hi`` and restore transitive closure in O(n^2).

        Every known descendant of ``lo`` becomes a descendant of every known
        ancestor of ``hi``.  Raises :class:`InconsistentOrderError` if the
        matrix already holds the opposite relation.
        """
        if lo == hi:
            raise ValueError(f"cannot compare an item with itself: {lo}")
        cur = self.m[lo, hi]
        if cur == -1:
            raise InconsistentOrderError(
                f"comparison {lo} < {hi} contradicts the known order"
            )
        if cur == 1:
            return self
        desc = np.flatnonzero(self.m[:, lo] == 1)
        anc = np.flatnonzero(self.m[hi, :] == 1)
        sub = self.m[np.ix_(desc, anc)]
        new = sub == 0
        if new.any():
            rows, cols = np.nonzero(new)
            ki = desc[rows]
            lj = anc[cols]
            self.m[ki, lj] = 1
            self.m[lj, ki] = -1
            np.add.at(self.d, lj, 1)
            np.add.at(self.a, ki, 1)
            self._known += len(ki)
        return self


def closure_insert(m: OrderMatrix, rec: ComparisonRecord) -> OrderMatrix:
    """Insert one comparison into a closed matrix (mutates and returns it)."""
    return m.insert(rec[0], rec[1])


def closure_from_history(history: Iterable[ComparisonRecord], n: int) -> OrderMatrix:
    """Transitive closure of a comparison history (Floyd-Warshall equivalent)."""
    return OrderMatrix.from_history(history, n)


@dataclass(frozen=True)
class ScoreSet:
    """Per-element descendant/ancestor counts and the derived scores."""

    d: np.ndarray
    a: np.ndarray
    info: np.ndarray  # d + a, amount of information acquired per element
    delta: np.ndarray  # d - a
    rho: tuple[Fraction, ...]  # d / (d + a), kept exact to avoid tie artifacts


def compute_scores(m: OrderMatrix) -> ScoreSet:
    d = m.d.copy()
    a = m.a.copy()
    rho = tuple(Fraction(int(di), int(di + ai)) for di, ai in zip(d, a))
    return ScoreSet(d=d, a=a, info=d + a, delta=d - a, rho=rho)


def score_and_sort(scores: Sequence, n: int | None = None) -> list[int]:
    """Indices sorted ascending by score; ties keep original index order."""
    if n is None:
        n = len(scores)
    elif n != len(scores):
        raise ValueError(f"expected {n} scores, got {len(scores)}")
    return sorted(range(n), key=lambda i: scores[i])


def is_linear_extension(m: OrderMatrix, candidate: Sequence[int]) -> bool:
    """True iff no element of ``candidate`` precedes one of its descendants."""
    if len(candidate) != m.n:
        raise ValueError(f"candidate has {len(candidate)} items, expected {m.n}")
    perm = np.asarray(candidate)
    sub = m.m[np.ix_(perm, perm)]
    return not np.any(np.triu(sub, k=1) == -1)
