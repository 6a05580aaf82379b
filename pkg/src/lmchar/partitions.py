"""Integer partitions.

A partition is stored as a plain tuple of positive integers in weakly
decreasing order; the empty tuple is the unique partition of 0.  Tuples are
hashable and immutable, which is all the symmetric-function code needs from a
dictionary key.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Tuple

Partition = Tuple[int, ...]

EMPTY: Partition = ()


def make_partition(parts: Iterable[int]) -> Partition:
    """Return the canonical (sorted, zero-free) partition with the given parts.

    Zeros are dropped; negative parts are rejected.
    """
    parts = [int(p) for p in parts]
    if any(p < 0 for p in parts):
        raise ValueError(f"partition parts must be non-negative: {parts}")
    return tuple(sorted((p for p in parts if p), reverse=True))


def is_partition(parts) -> bool:
    if not isinstance(parts, tuple):
        return False
    return all(isinstance(p, int) and p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def weight(lam: Partition) -> int:
    return sum(lam)


def length(lam: Partition) -> int:
    return len(lam)


def multiplicities(lam: Partition) -> dict[int, int]:
    """Map each part size k to m_k, the number of parts equal to k."""
    return dict(Counter(lam))


@lru_cache(maxsize=None)
def _partitions_bounded(n: int, largest: int) -> tuple[Partition, ...]:
    if n == 0:
        return (EMPTY,)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n``, lexicographically descending.

    >>> enumerate_partitions(4)
    ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    """
    if n < 0:
        raise ValueError(f"cannot partition a negative integer: {n}")
    return _partitions_bounded(n, n)


def aut_order(lam: Partition) -> int:
    """Order of the stabilizer of ``lam`` under permutation of its parts."""
    return prod(factorial(m) for m in Counter(lam).values())


def num_ordered(lam: Partition) -> int:
    """Number of distinct orderings of the parts of ``lam``: l! / #Aut."""
    return factorial(len(lam)) // aut_order(lam)


def centralizer_order(mu: Partition) -> int:
    """z_mu = prod_k k^{m_k} m_k!, the centralizer order of a permutation of cycle type mu."""
    return prod(k**m * factorial(m) for k, m in Counter(mu).items())


def add(lam: Partition, mu: Partition) -> Partition:
    """Multiset union of parts."""
    return tuple(sorted(lam + mu, reverse=True))


def stretch(r: int, lam: Partition) -> Partition:
    """Multiply every part by ``r``."""
    if r < 1:
        raise ValueError(f"stretch factor must be positive: {r}")
    return tuple(r * p for p in lam)


def hook(n: int, i: int) -> Partition:
    """The hook (n - i, 1^i)."""
    if not 0 <= i < n:
        raise ValueError(f"hook (n-i, 1^i) needs 0 <= i < n, got n={n}, i={i}")
    return (n - i,) + (1,) * i


def single_row(n: int) -> Partition:
    return (n,) if n else EMPTY


def ones(n: int) -> Partition:
    return (1,) * n
