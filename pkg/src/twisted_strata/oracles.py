"""Independent counting oracles for the classical enumerations.

Nothing here calls into ``weyl_core`` or ``cuspidal_support``: partitions are
generated by a separate routine and 2-cores are found on a 2-runner abacus.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import gcd


def partition_count(n: int) -> int:
    """Number of partitions of n by the standard coin-change recurrence."""
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            ways[total] += ways[total - part]
    return ways[n]


@lru_cache(maxsize=None)
def _ascending(n: int, smallest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    return tuple((first,) + rest for first in range(smallest, n + 1)
                 for rest in _ascending(n - first, first))


def brute_partitions(n: int) -> list[tuple[int, ...]]:
    """Partitions of n, each returned weakly decreasing."""
    return [tuple(reversed(p)) for p in _ascending(n, 1)]


def brute_bipartition_count(n: int) -> int:
    return sum(1 for j in range(n + 1) for _ in brute_partitions(j)
               for _ in brute_partitions(n - j))


def two_core(parts: tuple[int, ...]) -> tuple[int, ...]:
    """2-core of a partition, computed by sliding beads on a 2-runner abacus."""
    length = len(parts)
    beta = [p + length - 1 - i for i, p in enumerate(parts)]
    even = sum(1 for b in beta if b % 2 == 0)
    odd = length - even
    core_beta = sorted([2 * i for i in range(even)] + [2 * i + 1 for i in range(odd)],
                       reverse=True)
    core = [b - (length - 1 - i) for i, b in enumerate(core_beta)]
    return tuple(c for c in core if c > 0)


def staircase_index(core: tuple[int, ...]) -> int:
    """k such that ``core`` is the staircase (k, k-1, ..., 1)."""
    k = len(core)
    if core != tuple(range(k, 0, -1)):
        raise ValueError(f"{core} is not a staircase")
    return k


def core_profile(n_plus_1: int) -> Counter:
    """How many partitions of n+1 have each staircase 2-core index k."""
    return Counter(staircase_index(two_core(p)) for p in brute_partitions(n_plus_1))


def twisted_a_count(n: int) -> int:
    """|CS'| for 2A_n counted through 2-cores and 2-quotients."""
    total = 0
    for k, count in core_profile(n + 1).items():
        weight = (n + 1 - k * (k + 1) // 2) // 2
        if count != brute_bipartition_count(weight):
            raise AssertionError(f"core k={k}: {count} partitions vs "
                                 f"{brute_bipartition_count(weight)} bipartitions")
        total += count
    return total


def twisted_d_count(n: int) -> int:
    """|CS'| for 2D_n: empty datum plus one datum per odd k >= 3, k^2 <= n."""
    total = brute_bipartition_count(n - 1)
    k = 3
    while k * k <= n:
        total += brute_bipartition_count(n - k * k)
        k += 2
    return total


def coprime_count(m: int) -> int:
    return sum(1 for j in range(m) if gcd(j, m) == 1)
