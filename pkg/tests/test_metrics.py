import itertools

import pytest

from anysort import footrule, max_footrule, normalized_footrule
from anysort.metrics import rank_distance, validate_permutation
from fractions import Fraction

from conftest import random_truth, rng_for


def test_sorted_estimate_is_zero():
    for n in (1, 2, 5, 9):
        truth = list(range(1, n + 1))
        assert footrule(list(range(n)), truth) == 0


def test_five_element_worked_example():
    # estimate whose placed true ranks read (2,3,1,5,4) has error 6
    truth = [1, 2, 3, 4, 5]
    estimate = [1, 2, 0, 4, 3]
    assert footrule(estimate, truth) == 6


def test_reversed_estimate_attains_max():
    truth = [1, 2, 3, 4, 5]
    assert footrule([4, 3, 2, 1, 0], truth) == 12 == max_footrule(5)


def test_max_footrule_by_exhaustion():
    for n in range(2, 8):
        truth = list(range(1, n + 1))
        worst = max(
            footrule(list(p), truth) for p in itertools.permutations(range(n))
        )
        assert worst == max_footrule(n) == n * n // 2


def test_footrule_self_and_symmetry():
    rng = rng_for(1)
    for _ in range(200):
        n = int(rng.integers(2, 12))
        a = random_truth(rng, n)
        b = random_truth(rng, n)
        assert rank_distance(a, a) == 0
        assert rank_distance(a, b) == rank_distance(b, a)


def test_size_mismatch_rejected():
    with pytest.raises(ValueError):
        footrule([0, 1], [1, 2, 3])
    with pytest.raises(ValueError):
        rank_distance([1], [1, 2])


def test_validate_permutation():
    validate_permutation([2, 1, 3])
    with pytest.raises(ValueError):
        validate_permutation([])
    with pytest.raises(ValueError):
        validate_permutation([1, 1, 3])
    with pytest.raises(ValueError):
        validate_permutation([0, 1, 2])


def test_normalized_footrule():
    truth = [1, 2, 3, 4, 5]
    assert normalized_footrule(list(range(5)), truth) == 0
    assert normalized_footrule([4, 3, 2, 1, 0], truth) == 1
    # error 2 on five elements normalizes to 2/12
    estimate = [0, 1, 2, 4, 3]
    assert normalized_footrule(estimate, truth) == Fraction(2, 12)
    with pytest.raises(ValueError):
        normalized_footrule([0], [1])
