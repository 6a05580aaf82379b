from functools import lru_cache
from itertools import permutations, product
from math import factorial

import pytest
from hypothesis import given, strategies as st

from lmchar import partitions as P


@lru_cache(maxsize=None)
def count_partitions(n, largest):
    """Independent recursive count p(n, parts <= largest)."""
    if n == 0:
        return 1
    if largest == 0:
        return 0
    total = count_partitions(n, largest - 1)
    if largest <= n:
        total += count_partitions(n - largest, largest)
    return total


def brute_partitions(n):
    """Every weakly decreasing tuple summing to n, found by filtering compositions."""
    found = set()
    for k in range(n + 1):
        for parts in product(range(1, n + 1), repeat=k):
            if sum(parts) == n and list(parts) == sorted(parts, reverse=True):
                found.add(parts)
    return found


small_partitions = st.integers(0, 8).flatmap(lambda n: st.sampled_from(P.enumerate_partitions(n)))


def test_enumerate_small():
    assert P.enumerate_partitions(0) == ((),)
    assert P.enumerate_partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert len(P.enumerate_partitions(6)) == 11


@pytest.mark.parametrize("n", range(0, 7))
def test_enumerate_matches_brute_force(n):
    assert set(P.enumerate_partitions(n)) == brute_partitions(n)


@pytest.mark.parametrize("n", range(0, 31))
def test_enumerate_counts_and_order(n):
    parts = P.enumerate_partitions(n)
    assert len(parts) == count_partitions(n, n)
    assert len(set(parts)) == len(parts)
    assert all(P.weight(lam) == n and P.is_partition(lam) for lam in parts)
    assert list(parts) == sorted(parts, reverse=True)


def test_enumerate_negative():
    with pytest.raises(ValueError):
        P.enumerate_partitions(-1)


def test_num_ordered_examples():
    assert P.num_ordered((5,)) == 1
    assert P.num_ordered((2, 1, 1)) == 3
    assert P.num_ordered((1, 1, 1)) == 1
    assert P.num_ordered(()) == 1


@pytest.mark.parametrize("n", range(0, 9))
def test_num_ordered_matches_distinct_permutations(n):
    for lam in P.enumerate_partitions(n):
        assert P.num_ordered(lam) == len(set(permutations(lam)))


def test_centralizer_examples():
    assert P.centralizer_order((1, 1, 1)) == 6
    assert P.centralizer_order((2, 1)) == 2
    assert P.centralizer_order((7,)) == 7
    assert P.centralizer_order(()) == 1


@pytest.mark.parametrize("n", range(0, 13))
def test_class_sizes_sum_to_group_order(n):
    total = sum(factorial(n) // P.centralizer_order(mu) for mu in P.enumerate_partitions(n))
    assert total == factorial(n)


def test_add_and_stretch_examples():
    assert P.add((2, 1), (3, 1)) == (3, 2, 1, 1)
    assert P.add((4, 2), ()) == (4, 2)
    assert P.add((1,), (1,)) == (1, 1)
    assert P.stretch(2, (2, 1)) == (4, 2)
    assert P.stretch(1, (3, 3, 1)) == (3, 3, 1)
    assert P.stretch(3, (1, 1)) == (3, 3)


@given(small_partitions, small_partitions, small_partitions)
def test_add_commutative_associative(a, b, c):
    assert P.add(a, b) == P.add(b, a)
    assert P.add(P.add(a, b), c) == P.add(a, P.add(b, c))
    assert P.weight(P.add(a, b)) == P.weight(a) + P.weight(b)
    assert P.is_partition(P.add(a, b))


@given(st.integers(1, 5), small_partitions)
def test_stretch_multiplies_weight(r, lam):
    assert P.weight(P.stretch(r, lam)) == r * P.weight(lam)
    assert P.is_partition(P.stretch(r, lam))


def test_make_partition_and_hook():
    assert P.make_partition([1, 3, 0, 2]) == (3, 2, 1)
    assert P.hook(4, 1) == (3, 1)
    with pytest.raises(ValueError):
        P.hook(3, 3)
    with pytest.raises(ValueError):
        P.make_partition([2, -1])
