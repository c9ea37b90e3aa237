"""Exact solvers for h-index achievability and maximization by merging.

Deciding whether merging can push the h-index to a target k is NP-hard in
general, but desk-scale profiles are solved exactly: items at or above k
stand alone as witness groups, and a bin-covering search builds the missing
witness groups from the remaining items. A restricted-growth-string
enumerator doubles as an independent brute-force oracle for testing.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator

from .covering import DEFAULT_NODE_BUDGET, cover_bins
from .improvement import improving_partition
from .model import (
    MergePartition,
    Profile,
    group_sums,
    h_index,
    h_index_of_values,
    partition_value,
    singleton_partition,
)

DEFAULT_ORACLE_CAP = 11  # Bell(11) = 678,570 partitions


class OracleCapExceededError(RuntimeError):
    """The instance is too large for exhaustive enumeration."""

    def __init__(self, size: int, cap: int):
        super().__init__(f"instance size {size} exceeds the oracle cap of {cap}")
        self.size = size
        self.cap = cap


@dataclass(frozen=True)
class AchievabilityCertificate:
    """A partition whose witness groups prove the target value is reachable.

    Every group indexed by `witness_group_ids` has a merged citation count
    of at least k, and there are at least k of them.
    """

    partition: MergePartition
    k: int
    witness_group_ids: frozenset[int]


@dataclass(frozen=True)
class MaxResult:
    """Certified maximum merged h-index plus search telemetry."""

    value: int
    certificate: AchievabilityCertificate
    nodes_explored: int


def _achieve(profile: Profile, k: int, node_budget: int) -> tuple[AchievabilityCertificate | None, int]:
    """Decision core shared by is_achievable and max_achievable.

    Returns (certificate or None, nodes explored). Items with at least k
    citations are promoted to singleton witness groups up front (splitting
    a mixed group never loses a witness), the remaining witness groups come
    from an exact bin-covering search over the small items, and unused
    small items are collected in one trailing garbage group.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    citations = profile.citations
    n = len(citations)
    if k > n or k * k > profile.total:
        return None, 0

    order = profile.canonical_order()
    big = [i for i in order if citations[i] >= k]
    small = [i for i in order if citations[i] < k]
    missing = k - len(big)

    if missing <= 0:
        groups = [frozenset((i,)) for i in big]
        witness = frozenset(range(len(big)))
        if small:
            groups.append(frozenset(small))
        return AchievabilityCertificate(MergePartition(tuple(groups)), k, witness), 0

    covered, nodes = cover_bins([citations[i] for i in small], missing, demand=k, node_budget=node_budget)
    if covered is None:
        return None, nodes

    groups = [frozenset((i,)) for i in big]
    used: set[int] = set()
    for positions in covered:
        groups.append(frozenset(small[p] for p in positions))
        used.update(positions)
    witness = frozenset(range(len(big) + len(covered)))
    leftover = [small[p] for p in range(len(small)) if p not in used]
    if leftover:
        groups.append(frozenset(leftover))
    return AchievabilityCertificate(MergePartition(tuple(groups)), k, witness), nodes


def is_achievable(profile: Profile, k: int, *, node_budget: int = DEFAULT_NODE_BUDGET) -> AchievabilityCertificate | None:
    """Certificate that some merge partition reaches value k, or None.

    Immediately absent when k exceeds the item count or k**2 exceeds the
    total citation mass (k disjoint groups of sum >= k cannot exist).
    """
    certificate, _ = _achieve(profile, k, node_budget)
    return certificate


def max_achievable(profile: Profile, *, node_budget: int = DEFAULT_NODE_BUDGET) -> MaxResult:
    """Certified maximum value over all merge partitions.

    Iterates k upward from the unmerged h-index (always achievable by
    singletons); the first k that fails certifies k-1 as the maximum,
    since achievability is monotone downward in k.
    """
    k = h_index(profile)
    spent = 0
    best, nodes = _achieve(profile, k, node_budget)
    spent += nodes
    while True:
        candidate, nodes = _achieve(profile, k + 1, node_budget - spent)
        spent += nodes
        if candidate is None:
            return MaxResult(value=best.k, certificate=best, nodes_explored=spent)
        best = candidate
        k += 1


def _compose(outer: MergePartition, meta: MergePartition) -> MergePartition:
    """Merge outer groups according to a partition of their indices."""
    return MergePartition(tuple(
        frozenset().union(*(outer.groups[g] for g in meta_group))
        for meta_group in meta.groups
    ))


def greedy_lower_bound(profile: Profile) -> tuple[int, MergePartition]:
    """Iterate the polynomial improvement construction to a local maximum.

    Each round treats the current group sums as a fresh profile and applies
    one improving merge step; rounds compose until no improvement exists.
    The result is a lower bound for max_achievable, not the maximum.
    """
    current = singleton_partition(profile)
    while True:
        sums_profile = Profile.from_citations(group_sums(profile, current))
        witness = improving_partition(sums_profile)
        if witness is None:
            value = partition_value(profile, current).value
            return value, current
        current = _compose(current, witness.partition)


def enumerate_partitions(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Every set partition of {0..n-1} exactly once, as tuples of blocks.

    Enumeration follows restricted-growth-string lexicographic order
    (block labels in order of first appearance); n=0 yields the single
    empty partition.
    """
    if n == 0:
        yield ()
        return
    labels = [0] * n
    cap = [1] * n  # cap[i] = max(labels[:i]) + 1, the largest label allowed at i
    while True:
        blocks: list[list[int]] = [[] for _ in range(max(labels) + 1)]
        for item, label in enumerate(labels):
            blocks[label].append(item)
        yield tuple(tuple(block) for block in blocks)
        i = n - 1
        while i >= 1 and labels[i] >= cap[i]:
            i -= 1
        if i <= 0:
            return
        labels[i] += 1
        following_cap = max(cap[i], labels[i] + 1)
        for j in range(i + 1, n):
            labels[j] = 0
            cap[j] = following_cap


def brute_force_max(profile: Profile, *, oracle_cap: int = DEFAULT_ORACLE_CAP) -> MaxResult:
    """Oracle maximization: evaluate every set partition of the profile.

    Independent of the solver path on purpose; returns the first argmax in
    enumeration order. nodes_explored counts evaluated partitions.
    """
    n = len(profile)
    if n > oracle_cap:
        raise OracleCapExceededError(n, oracle_cap)
    citations = profile.citations
    best_value = -1
    best_blocks: tuple[tuple[int, ...], ...] = ()
    count = 0
    for blocks in enumerate_partitions(n):
        count += 1
        value = h_index_of_values(sum(citations[i] for i in block) for block in blocks)
        if value > best_value:
            best_value = value
            best_blocks = blocks
    partition = MergePartition.from_groups(best_blocks)
    report = partition_value(profile, partition)
    certificate = AchievabilityCertificate(partition, best_value, report.witness_group_ids)
    return MaxResult(value=best_value, certificate=certificate, nodes_explored=count)


def iter_small_multisets(max_size: int, max_value: int) -> Iterator[tuple[int, ...]]:
    """All citation multisets with size <= max_size and values in 1..max_value."""
    for size in range(max_size + 1):
        yield from combinations_with_replacement(range(1, max_value + 1), size)
