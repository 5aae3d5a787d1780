"""Brute-force reference: hand-checked lists and basic shape properties."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ascpart import CapacityError, DomainError
from ascpart.oracle import brute_compositions, brute_ratio_count, has_ratio_property


def test_compositions_of_four():
    assert brute_compositions(4) == [
        (1, 1, 1, 1), (1, 1, 2), (1, 3), (2, 2), (4,)]


def test_single_part_only():
    for n in (1, 5, 23):
        assert brute_compositions(n, n) == [(n,)]


def test_ratio_witnesses_fifteen_min_three():
    got = [c for c in brute_compositions(15, 3) if has_ratio_property(c, 2)]
    assert got == [(3, 3, 3, 6), (3, 3, 9), (3, 4, 8), (3, 12), (4, 11), (5, 10), (15,)]
    assert brute_ratio_count(15, 3, 2) == 7


def test_ratio_witnesses_twelve():
    got = [c for c in brute_compositions(12, 3) if has_ratio_property(c, 2)]
    assert got == [(3, 3, 6), (3, 9), (4, 8), (12,)]


def test_ratio_witnesses_triple():
    got = [c for c in brute_compositions(15, 3) if has_ratio_property(c, 3)]
    assert got == [(3, 3, 9), (3, 12), (15,)]


def test_ratio_property_reads_largest_two_parts():
    assert has_ratio_property((15,), 9)
    assert has_ratio_property((3, 4, 8), 2)
    assert not has_ratio_property((3, 4, 8), 3)
    assert not has_ratio_property((2, 2), 2)


def test_guards():
    with pytest.raises(DomainError):
        brute_compositions(0)
    with pytest.raises(DomainError):
        brute_compositions(5, 0)
    with pytest.raises(CapacityError):
        brute_compositions(61)
    with pytest.raises(DomainError):
        brute_ratio_count(5, 1, 0)


@given(n=st.integers(1, 24), m=st.integers(1, 6))
@settings(max_examples=80, deadline=None)
def test_output_sorted_unique_and_valid(n, m):
    comps = brute_compositions(n, m)
    assert comps == sorted(set(comps))
    for c in comps:
        assert sum(c) == n
        assert all(a >= m for a in c)
        assert all(a <= b for a, b in zip(c, c[1:]))
