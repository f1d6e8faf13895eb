"""Shared test helpers: seeded random structures and independent oracles."""

from __future__ import annotations

import numpy as np
import pytest

from anysort import ComparisonRecord, OrderMatrix


def rng_for(seed: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([987654321, seed]))


def random_truth(rng: np.random.Generator, n: int) -> list[int]:
    """Uniform random rank permutation (values 1..n)."""
    return (rng.permutation(n) + 1).tolist()


def random_history(
    rng: np.random.Generator, n: int, k: int
) -> list[ComparisonRecord]:
    """A consistent comparison history: k random pairs oriented by a hidden
    uniform ground truth."""
    if n < 2:
        return []
    truth = random_truth(rng, n)
    history = []
    for _ in range(k):
        i, j = rng.choice(n, size=2, replace=False).tolist()
        lo, hi = (i, j) if truth[i] < truth[j] else (j, i)
        history.append(ComparisonRecord(lo, hi))
    return history


def floyd_warshall_closure(history, n: int) -> np.ndarray:
    """Independent reachability oracle: boolean transitive closure of the raw
    relation via repeated squaring."""
    reach = np.eye(n, dtype=bool)
    for lo, hi in history:
        reach[lo, hi] = True
    while True:
        nxt = reach | (reach @ reach)
        if (nxt == reach).all():
            return reach
        reach = nxt


def matrix_from(history, n: int) -> OrderMatrix:
    return OrderMatrix.from_history(history, n)


def drive_with_truth(sorter, truth):
    """Answer every pending pair from a rank permutation; returns history."""
    while (pair := sorter.next_pair()) is not None:
        less = pair.i if truth[pair.i] < truth[pair.j] else pair.j
        sorter.record_outcome(pair, less)
    return list(sorter.history)


def report(name: str, passed: bool, detail: str = "") -> None:
    """One pass/fail line per acceptance criterion, then the assertion."""
    status = "PASS" if passed else "FAIL"
    line = f"[acceptance] {status}: {name}"
    if detail:
        line += f" — {detail}"
    print(line)
    assert passed, line
