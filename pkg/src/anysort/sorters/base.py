"""Stepwise sorter protocol: one comparison out, one outcome in.

Each algorithm is written as a generator that yields item-index pairs
``(i, j)`` (meaning "is item i less than item j?") and receives the boolean
answer via ``send``.  The :class:`Sorter` wrapper enforces the alternating
next_pair / record_outcome protocol and keeps the oriented history.  Every
emitted comparison is asked and counted, even if the schedule re-asks a pair
it has seen before (heapsort and Shellsort do); the comparison count is the
algorithm's true cost, not the number of distinct pairs.
"""

from __future__ import annotations

from typing import Callable, Generator, Iterable, NamedTuple, Optional, Sequence

from ..errors import NativeEstimateUnavailable, SortStateError
from ..order import ComparisonRecord, OrderMatrix, compute_scores, score_and_sort


class PendingPair(NamedTuple):
    i: int
    j: int


Schedule = Generator[tuple[int, int], bool, None]


class AlgoState:
    """Mutable state shared between a schedule generator and its Sorter."""

    def __init__(self, n: int):
        self.n = n
        self.items: list[int] = list(range(n))
        # reads the current tentative arrangement; None => no native estimator
        self.estimate_fn: Optional[Callable[[], list[int]]] = None
        # set by corsort: the incrementally maintained closure
        self.matrix: Optional[OrderMatrix] = None


class Sorter:
    """Single-owner stepwise state machine for one sorting algorithm."""

    def __init__(self, algorithm: str, n: int, factory: Callable[[AlgoState], Schedule]):
        if n < 1:
            raise ValueError(f"need at least one item, got n={n}")
        self.algorithm = algorithm
        self.n = n
        self.history: list[ComparisonRecord] = []
        self.state = AlgoState(n)
        self.done = False
        self._pending: Optional[PendingPair] = None
        self._awaiting = False
        self._gen = factory(self.state)
        self._pump(first=True)

    @property
    def comparisons_done(self) -> int:
        return len(self.history)

    def _pump(self, answer: bool | None = None, first: bool = False) -> None:
        """Advance the schedule to its next pair."""
        try:
            i, j = next(self._gen) if first else self._gen.send(answer)
            self._pending = PendingPair(i, j)
        except StopIteration:
            self._pending = None
            self.done = True

    def peek_pair(self) -> Optional[PendingPair]:
        """The pending pair without claiming the turn (read-only view)."""
        return None if self.done else self._pending

    def next_pair(self) -> Optional[PendingPair]:
        """The next comparison to perform, or None once sorting is done."""
        if self._awaiting:
            raise SortStateError("previous pair has not been answered yet")
        if self.done:
            return None
        self._awaiting = True
        return self._pending

    def record_outcome(self, pair: PendingPair | tuple[int, int], less: int) -> None:
        """Feed the answer for the pending pair; ``less`` is the smaller item."""
        if not self._awaiting or self._pending is None:
            raise SortStateError("no pending pair awaiting an outcome")
        cur = self._pending
        if tuple(pair) != tuple(cur):
            raise SortStateError(f"outcome for {tuple(pair)} but pending pair is {tuple(cur)}")
        if less not in cur:
            raise SortStateError(f"{less} is not part of the pending pair {tuple(cur)}")
        hi = cur.j if less == cur.i else cur.i
        self.history.append(ComparisonRecord(lo=less, hi=hi))
        self._awaiting = False
        self._pump(answer=(less == cur.i))

    @property
    def has_native_estimate(self) -> bool:
        return self.state.estimate_fn is not None

    def native_estimate(self) -> list[int]:
        """The algorithm's own tentative arrangement of item indices."""
        if self.state.estimate_fn is None:
            raise NativeEstimateUnavailable(
                f"{self.algorithm} has no native estimator"
            )
        return self.state.estimate_fn()

    def rho_estimate(self) -> list[int]:
        """Score-and-sort by rho over the closure of the history so far."""
        matrix = self.state.matrix
        if matrix is None:
            matrix = OrderMatrix.from_history(self.history, self.n)
        return score_and_sort(compute_scores(matrix).rho)


def run_to_completion(sorter: Sorter, truth: Sequence[int]) -> tuple[int, list[ComparisonRecord]]:
    """Drive a sorter with answers taken from a ground-truth rank permutation."""
    if len(truth) != sorter.n:
        raise ValueError(f"truth has {len(truth)} ranks, sorter expects {sorter.n}")
    while (pair := sorter.next_pair()) is not None:
        less = pair.i if truth[pair.i] < truth[pair.j] else pair.j
        sorter.record_outcome(pair, less)
    return sorter.comparisons_done, list(sorter.history)


def replay_outcomes(sorter: Sorter, history: Iterable[ComparisonRecord]) -> None:
    """Feed a recorded history back into a fresh sorter of the same algorithm."""
    it = iter(history)
    while (pair := sorter.next_pair()) is not None:
        rec = next(it)
        if frozenset(rec) != frozenset(pair):
            raise SortStateError(
                f"replayed history diverged: expected pair {tuple(pair)}, got {tuple(rec)}"
            )
        sorter.record_outcome(pair, rec.lo)
