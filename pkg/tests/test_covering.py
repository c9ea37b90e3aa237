"""Covering search engine, cross-checked against independent oracles."""

import random

import pytest

from hmerge import NodeBudgetExceededError, cover_bins, enumerate_partitions


def oracle_cover(weights, bins, demand):
    """Brute force over all pairwise-disjoint families of heavy subsets."""
    n = len(weights)
    subsets = [m for m in range(1, 1 << n)
               if sum(weights[i] for i in range(n) if m >> i & 1) >= demand]

    def rec(chosen_mask, left, start):
        if left == 0:
            return True
        for idx in range(start, len(subsets)):
            s = subsets[idx]
            if not s & chosen_mask and rec(chosen_mask | s, left - 1, idx + 1):
                return True
        return False

    return rec(0, bins, 0)


def oracle_exact(weights, bins, target):
    """Brute force over full set partitions with exactly `bins` blocks of sum `target`."""
    for blocks in enumerate_partitions(len(weights)):
        if len(blocks) == bins and all(sum(weights[i] for i in blk) == target for blk in blocks):
            return True
    return False


def assert_solution_shape(weights, bins, demand, cap, solution):
    used = [i for group in solution for i in group]
    assert len(used) == len(set(used))
    assert all(0 <= i < len(weights) for i in used)
    assert len(solution) == bins
    for group in solution:
        s = sum(weights[i] for i in group)
        assert s >= demand
        if cap is not None:
            assert s <= cap


def test_cover_mode_matches_oracle():
    rng = random.Random(123)
    for _ in range(250):
        weights = [rng.randint(1, 10) for _ in range(rng.randint(0, 7))]
        bins = rng.randint(1, 3)
        demand = rng.randint(1, 15)
        solution, _ = cover_bins(weights, bins, demand)
        assert (solution is not None) == oracle_cover(weights, bins, demand), (weights, bins, demand)
        if solution is not None:
            assert_solution_shape(weights, bins, demand, None, solution)


def test_exact_mode_matches_oracle():
    rng = random.Random(321)
    checked = 0
    while checked < 250:
        bins = rng.randint(1, 3)
        weights = [rng.randint(1, 9) for _ in range(rng.randint(bins, 8))]
        total = sum(weights)
        if total % bins:
            continue
        target = total // bins
        checked += 1
        solution, _ = cover_bins(weights, bins, demand=target, cap=target)
        assert (solution is not None) == oracle_exact(weights, bins, target), (weights, bins, target)
        if solution is not None:
            assert_solution_shape(weights, bins, target, target, solution)


def test_zero_bins_is_trivially_covered():
    assert cover_bins([5, 3], 0, demand=4) == ([], 0)


def test_rejects_degenerate_parameters():
    with pytest.raises(ValueError):
        cover_bins([3], 1, demand=0)
    with pytest.raises(ValueError):
        cover_bins([3], 1, demand=5, cap=4)


def test_duplicate_weights_do_not_blow_up_the_search():
    # 30 equal items, 3 bins: duplicate skipping + memoization keep this tiny
    solution, nodes = cover_bins([2] * 30, 3, demand=8)
    assert solution is not None
    assert nodes < 2000


def test_budget_is_enforced():
    with pytest.raises(NodeBudgetExceededError):
        cover_bins([2] * 10, 3, demand=5, node_budget=3)
