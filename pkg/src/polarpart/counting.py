"""Counters for the partition families and the closed-form identity right-hand sides.

The fast counters (``count_p*``, ``count_d_distant``, the Durfee sums) go through a
shared table of p_k(m) and never enumerate. ``count_polarized`` and
``count_s_class`` are enumeration-backed and memoized.
"""

from __future__ import annotations

import threading
from functools import lru_cache
from math import isqrt
from typing import Optional

from .core import Partition, format_partition, is_distinct
from .enumeration import polarized_partitions, s_class_partitions


class CountCache:
    """Growable table of p_k(m), the number of partitions of m into exactly k parts.

    Uses p_k(m) = p_{k-1}(m-1) + p_k(m-k), p_0(0) = 1.
    """

    def __init__(self):
        self._rows: list[list[int]] = [[1]]
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._rows)

    def _grow(self, n: int) -> None:
        with self._lock:
            rows = self._rows
            for m in range(len(rows), n + 1):
                row = [0] * (m + 1)
                for k in range(1, m + 1):
                    row[k] = rows[m - 1][k - 1] + (rows[m - k][k] if k <= m - k else 0)
                rows.append(row)

    def get(self, m: int, k: int) -> int:
        if m < 0 or k < 0 or k > m:
            return 0
        if m >= len(self._rows):
            self._grow(m)
        return self._rows[m][k]

    def row(self, m: int) -> list[int]:
        if m < 0:
            return []
        if m >= len(self._rows):
            self._grow(m)
        return self._rows[m]


_cache = CountCache()


def count_p_k(n: int, k: int) -> int:
    return _cache.get(n, k)


def count_p(n: int) -> int:
    return sum(_cache.row(n))


def count_p_min(n: int, r: int) -> int:
    """Partitions of n with every part >= r: remove r-1 from each of the k parts."""
    if r < 1:
        raise ValueError("r must be >= 1")
    total = 0
    k = 0
    while n - (r - 1) * k >= k:
        total += count_p_k(n - (r - 1) * k, k)
        k += 1
    return total


def count_d_distant(n: int, d: int, r: int = 1) -> int:
    """Partitions of n with adjacent parts differing by >= d and smallest part >= r.

    A k-part member minus the staircase d(k-1), ..., d, 0 and minus r-1 per part is
    an arbitrary k-part partition.
    """
    if d < 0 or r < 1:
        raise ValueError("need d >= 0 and r >= 1")
    if n < 0:
        return 0
    total = 0
    k = 0
    while True:
        m = n - d * k * (k - 1) // 2 - (r - 1) * k
        if m < k:
            break
        total += count_p_k(m, k)
        k += 1
    return total


def count_distinct_k(n: int, k: int) -> int:
    """Distinct-part partitions of n with exactly k parts."""
    if k < 0:
        return 0
    return count_p_k(n - k * (k - 1) // 2, k)


@lru_cache(maxsize=None)
def count_polarized(n: int, length: Optional[int] = None) -> int:
    if n < 0 or (length is not None and length < 0):
        return 0
    if length is not None and n < length * (length + 1) // 2:
        return 0
    return sum(1 for _ in polarized_partitions(n, length))


@lru_cache(maxsize=None)
def count_s_class(n: int, d: int) -> int:
    if n < 0:
        return 0
    return sum(1 for _ in s_class_partitions(n, d))


def max_length(n: int, d: int) -> int:
    """Largest l with l + d*l*(l-1)/2 <= n, i.e. the most parts a d-distant partition
    of n can have. Exact integer evaluation of floor((d-2 + sqrt((d-2)^2 + 8dn)) / 2d)."""
    if n < 0 or d < 1:
        raise ValueError("need n >= 0 and d >= 1")
    if n == 0:
        return 0
    return (d - 2 + isqrt((d - 2) ** 2 + 8 * d * n)) // (2 * d)


def theorem3_terms(n: int, d: int, r: int = 1) -> list[tuple[int, int, int]]:
    """The non-trivial summands (i, m_i, count) of the polarized sum for p^(d)(n, r),
    with m_i = n - (r-1)i - (d-2)i(i-1)/2. Stops once m_i is below the smallest
    weight i(i+1)/2 of an i-part distinct partition."""
    if d < 2 or r < 1:
        raise ValueError("need d >= 2 and r >= 1")
    terms = []
    i = 1
    while True:
        m = n - (r - 1) * i - (d - 2) * i * (i - 1) // 2
        if m < i * (i + 1) // 2:
            break
        terms.append((i, m, count_polarized(m, i)))
        i += 1
    return terms


def rhs_theorem3(n: int, d: int, r: int = 1) -> int:
    # the i = 0 summand is the empty partition, present only at n = 0
    return int(n == 0) + sum(c for _, _, c in theorem3_terms(n, d, r))


def rhs_durfee_d2(n: int) -> int:
    """Sum over Durfee sides i (i^2 <= n) of partitions of n - i^2 into at most i parts."""
    total = 0
    i = 0
    while i * i <= n:
        total += sum(count_p_k(n - i * i, j) for j in range(i + 1))
        i += 1
    return total


def rhs_durfee_d3(n: int) -> int:
    """Sum over i (i^2 <= n) of distinct partitions of n - i^2 with i-1 or i parts."""
    total = 0
    i = 0
    while i * i <= n:
        total += count_distinct_k(n - i * i, i) + count_distinct_k(n - i * i, i - 1)
        i += 1
    return total


def gap_reduce(p: Partition, q: int) -> Partition:
    """Subtract 0, q, 2q, ... from the parts taken smallest first."""
    if q < 2 or q % 2:
        raise ValueError("q must be an even integer >= 2")
    if not is_distinct(p):
        raise ValueError(f"parts must be distinct: {format_partition(p)}")
    ascending = p.parts[::-1]
    reduced = [x - q * j for j, x in enumerate(ascending)]
    if any(x <= 0 for x in reduced):
        raise ValueError(f"reducing {format_partition(p)} by {q} leaves a non-positive part")
    if len(set(reduced)) != len(reduced):
        raise ValueError(f"reducing {format_partition(p)} by {q} makes parts collide")
    return Partition(tuple(sorted(reduced, reverse=True)))
