"""Polynomial-time detection and construction of improving merge partitions.

Whether any merge can beat the unmerged h-index h reduces to a structural
test on the profile: split the h top items into the supercritical part
(above h) and the critical part (exactly h), reserve the |critical| smallest
items as merge partners ("tail"), and check that the leftover items carry
more than h citations in total. When the test passes, an explicit witness
partition is built: supercritical singletons, critical/tail pairs, and all
leftovers merged into one group.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import MergePartition, Profile, h_index, partition_value


@dataclass(frozen=True)
class Classification:
    """Decomposition of a profile around its h-index.

    The id sets are occurrence-level: equal citation counts in different
    positions are distinct items. `overlap` flags profiles too short for
    the tail to avoid the critical items, in which case tail_ids and
    critical_ids share ids and no improving partition exists.
    """

    h: int
    supercritical_ids: frozenset[int]
    critical_ids: frozenset[int]
    tail_ids: frozenset[int]
    rest_ids: frozenset[int]
    rest_sum: int
    overlap: bool


@dataclass(frozen=True)
class ImprovementWitness:
    """An explicit merge partition with value strictly above the h-index."""

    partition: MergePartition
    achieved: int


def classify(profile: Profile) -> Classification:
    """Split the profile into supercritical, critical, tail, and rest items.

    The h canonically-first items (largest counts) split by count > h vs
    == h; the tail is the |critical| canonically-last items. The segments
    overlap exactly when |profile| < |supercritical| + 2*|critical|.
    """
    citations = profile.citations
    order = profile.canonical_order()
    h = h_index(profile)
    head = order[:h]
    supercritical = frozenset(i for i in head if citations[i] > h)
    critical = frozenset(i for i in head if citations[i] == h)
    tail = frozenset(order[len(order) - len(critical):]) if critical else frozenset()
    overlap = len(order) < h + len(critical)
    rest = frozenset(range(len(citations))) - supercritical - critical - tail
    return Classification(
        h=h,
        supercritical_ids=supercritical,
        critical_ids=critical,
        tail_ids=tail,
        rest_ids=rest,
        rest_sum=sum(citations[i] for i in rest),
        overlap=overlap,
    )


def can_improve(profile: Profile) -> bool:
    """True iff some merge partition has value strictly above the h-index.

    Holds exactly when the critical and tail items can be chosen disjoint
    and the rest of the profile sums to more than h.
    """
    c = classify(profile)
    return not c.overlap and c.rest_sum > c.h


def improving_partition(profile: Profile) -> ImprovementWitness | None:
    """Construct a witness partition beating the h-index, or None.

    The witness has a fixed three-part shape: one singleton per
    supercritical item, one pair per critical item (matched with a tail
    item, both sides in citation-descending order), and a single group
    holding every remaining item (omitted when empty). Every group then
    sums to at least h+1, so the achieved value is strictly above h.
    """
    c = classify(profile)
    if c.overlap or c.rest_sum <= c.h:
        return None
    order = profile.canonical_order()
    n = len(order)
    n_super = len(c.supercritical_ids)
    n_crit = len(c.critical_ids)
    groups = [frozenset((i,)) for i in order[:n_super]]
    for j in range(n_crit):
        groups.append(frozenset((order[n_super + j], order[n - n_crit + j])))
    if c.rest_ids:
        groups.append(c.rest_ids)
    partition = MergePartition(tuple(groups))
    achieved = partition_value(profile, partition).value
    return ImprovementWitness(partition=partition, achieved=achieved)
