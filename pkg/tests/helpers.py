"""Shared assertions for solver certificates."""

from hmerge import group_sums, validate_partition


def assert_certificate(profile, certificate):
    """A certificate must be a valid partition with enough heavy witness groups."""
    validate_partition(profile, certificate.partition)
    sums = group_sums(profile, certificate.partition)
    assert len(certificate.witness_group_ids) >= certificate.k
    for g in certificate.witness_group_ids:
        assert sums[g] >= certificate.k, (g, sums[g], certificate.k)
