"""Citation profiles, merge partitions, and the two h-index value functions.

A profile is a multiset of positive citation counts where every occurrence
keeps its own identity (dense ids 0..n-1 in input order). A merge partition
groups item ids into merged articles; the value of a partition is the
h-index of its group sums.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable


class ParseError(ValueError):
    """Raised when a profile/partition document cannot be parsed."""


class InvalidPartitionError(ValueError):
    """A partition does not match its profile.

    `reason` is one of "empty-group", "unknown-id", "duplicate-id",
    "uncovered-id"; `group_index` / `item_id` point at the first violation
    (None where not applicable).
    """

    def __init__(self, reason: str, message: str, group_index=None, item_id=None):
        super().__init__(message)
        self.reason = reason
        self.group_index = group_index
        self.item_id = item_id


@dataclass(frozen=True)
class Item:
    """One article occurrence: a stable id and its citation count."""

    id: int
    citations: int


@dataclass(frozen=True)
class Profile:
    """A multiset of citation counts with per-occurrence identities.

    Item ids are array positions, so duplicates of the same citation count
    remain distinguishable. Citation counts must be >= 1.
    """

    citations: tuple[int, ...]

    def __post_init__(self):
        for pos, c in enumerate(self.citations):
            if not isinstance(c, int) or isinstance(c, bool) or c < 1:
                raise ValueError(f"citation count at position {pos} must be a positive integer, got {c!r}")

    @classmethod
    def from_citations(cls, counts: Iterable[int]) -> "Profile":
        return cls(tuple(counts))

    def __len__(self) -> int:
        return len(self.citations)

    @property
    def items(self) -> tuple[Item, ...]:
        return tuple(Item(i, c) for i, c in enumerate(self.citations))

    @property
    def total(self) -> int:
        return sum(self.citations)

    def canonical_order(self) -> tuple[int, ...]:
        """Item ids sorted by citations descending, ties by ascending id."""
        return tuple(sorted(range(len(self.citations)), key=lambda i: (-self.citations[i], i)))


@dataclass(frozen=True)
class MergePartition:
    """Disjoint nonempty groups of item ids; each group is a merged article."""

    groups: tuple[frozenset[int], ...]

    @classmethod
    def from_groups(cls, groups: Iterable[Iterable[int]]) -> "MergePartition":
        return cls(tuple(frozenset(g) for g in groups))

    def __len__(self) -> int:
        return len(self.groups)


@dataclass(frozen=True)
class ValueReport:
    """Partition value plus the group indices of a maximum good subset."""

    value: int
    witness_group_ids: frozenset[int]


def h_index_of_values(values: Iterable[int]) -> int:
    """Largest t such that at least t of the values are >= t."""
    h = 0
    for rank, v in enumerate(sorted(values, reverse=True), start=1):
        if v >= rank:
            h = rank
        else:
            break
    return h


def h_index(profile: Profile) -> int:
    """The h-index of the unmerged profile; 0 for an empty profile."""
    return h_index_of_values(profile.citations)


def validate_partition(profile: Profile, partition: MergePartition) -> None:
    """Check partition invariants against the profile; raise on the first violation.

    Violations are reported distinctly: empty group, unknown item id,
    duplicate item id (group overlap), uncovered item id.
    """
    n = len(profile)
    seen: set[int] = set()
    for gi, group in enumerate(partition.groups):
        if not group:
            raise InvalidPartitionError("empty-group", f"group {gi} is empty", group_index=gi)
        for item_id in sorted(group):
            if not (0 <= item_id < n):
                raise InvalidPartitionError(
                    "unknown-id", f"group {gi} references unknown item id {item_id}",
                    group_index=gi, item_id=item_id)
            if item_id in seen:
                raise InvalidPartitionError(
                    "duplicate-id", f"item id {item_id} appears in more than one group (again in group {gi})",
                    group_index=gi, item_id=item_id)
            seen.add(item_id)
    if len(seen) != n:
        missing = min(set(range(n)) - seen)
        raise InvalidPartitionError("uncovered-id", f"item id {missing} is not covered by any group", item_id=missing)


def singleton_partition(profile: Profile) -> MergePartition:
    """One group per item, in id order (the no-merge partition)."""
    return MergePartition(tuple(frozenset((i,)) for i in range(len(profile))))


def group_sums(profile: Profile, partition: MergePartition) -> tuple[int, ...]:
    """Merged citation count of each group, in group order."""
    validate_partition(profile, partition)
    return tuple(sum(profile.citations[i] for i in group) for group in partition.groups)


def partition_value(profile: Profile, partition: MergePartition) -> ValueReport:
    """Value of a merge partition: the h-index of its group sums.

    The witness is the canonical maximum good subset: groups ranked by sum
    descending, ties by lowest group index.
    """
    sums = group_sums(profile, partition)
    value = h_index_of_values(sums)
    ranked = sorted(range(len(sums)), key=lambda g: (-sums[g], g))
    return ValueReport(value=value, witness_group_ids=frozenset(ranked[:value]))


# --- text / JSON interchange -------------------------------------------------

def parse_profile_text(text: str) -> Profile:
    """Whitespace/newline-separated positive integers; empty input is an empty profile."""
    counts = []
    for tok in text.split():
        try:
            counts.append(int(tok))
        except ValueError:
            raise ParseError(f"not an integer: {tok!r}") from None
    try:
        return Profile.from_citations(counts)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def profile_to_text(profile: Profile) -> str:
    return " ".join(str(c) for c in profile.citations)


def parse_profile_json(text: str) -> Profile:
    """JSON document with a "citations" array; item ids are array positions."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or "citations" not in doc:
        raise ParseError('expected a JSON object with a "citations" field')
    counts = doc["citations"]
    if not isinstance(counts, list):
        raise ParseError('"citations" must be an array')
    try:
        return Profile.from_citations(counts)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def partition_to_lists(partition: MergePartition) -> list[list[int]]:
    """Array-of-arrays form (ids ascending within each group)."""
    return [sorted(g) for g in partition.groups]


def parse_partition_json(text: str) -> MergePartition:
    """Array of arrays of item ids."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, list) or not all(isinstance(g, list) for g in doc):
        raise ParseError("expected an array of arrays of item ids")
    for g in doc:
        for x in g:
            if not isinstance(x, int) or isinstance(x, bool):
                raise ParseError(f"item id must be an integer, got {x!r}")
    return MergePartition.from_groups(doc)
