"""Exhaustive generators for the partition families.

Every generator yields partitions in lexicographically decreasing order of
their parts, so two runs over the same arguments produce identical streams.
"""

from __future__ import annotations

from typing import Iterator, Optional

from .core import ConstraintSpec, Partition, is_polarized


def _weight_bounds(j: int, cap: int, gap: int, low: int) -> tuple[int, int]:
    # j parts, each >= low, top part <= cap, adjacent gaps >= gap
    tri = gap * j * (j - 1) // 2
    return j * low + tri, j * cap - tri


def _feasible(m: int, cap: int, gap: int, low: int, j: Optional[int]) -> bool:
    if j is not None:
        if j == 0:
            return m == 0
        lo, hi = _weight_bounds(j, cap, gap, low)
        return lo <= m <= hi
    if m == 0:
        return True
    j = 1
    while True:
        lo, hi = _weight_bounds(j, cap, gap, low)
        if lo > m:
            return False
        if m <= hi:
            return True
        j += 1


def _generate(m: int, cap: int, gap: int, low: int, j: Optional[int]) -> Iterator[tuple[int, ...]]:
    if m == 0:
        if j is None or j == 0:
            yield ()
        return
    if j == 0:
        return
    nxt = None if j is None else j - 1
    for first in range(min(m, cap), low - 1, -1):
        rest = m - first
        rest_cap = first - gap
        if rest == 0:
            if nxt is None or nxt == 0:
                yield (first,)
            continue
        if rest_cap < low or not _feasible(rest, rest_cap, gap, low, nxt):
            continue
        for tail in _generate(rest, rest_cap, gap, low, nxt):
            yield (first,) + tail


def partitions(n: int, spec: ConstraintSpec = ConstraintSpec()) -> Iterator[Partition]:
    """Yield each partition of ``n`` admitted by ``spec`` exactly once."""
    if n < 0:
        return
    for parts in _generate(n, n, spec.gap, spec.min_part, spec.fixed_length):
        yield Partition(parts)


def distinct_partitions(n: int, length: Optional[int] = None) -> Iterator[Partition]:
    return partitions(n, ConstraintSpec(gap=1, fixed_length=length))


def polarized_partitions(n: int, length: Optional[int] = None) -> Iterator[Partition]:
    for p in distinct_partitions(n, length):
        if is_polarized(p):
            yield p


def s_class_partitions(n: int, d: int) -> Iterator[Partition]:
    """Members of the S-class for ``d``: smallest part >= 1 + (l-1)q/2,
    distinct parts when ``d`` is odd."""
    if d < 2:
        raise ValueError("d must be >= 2")
    if n < 0:
        return
    if n == 0:
        yield Partition(())
        return
    gap = d % 2
    half_q = (d - d % 2) // 2
    found = []
    length = 1
    while True:
        low = 1 + (length - 1) * half_q
        if _weight_bounds(length, n, gap, low)[0] > n:
            break
        spec = ConstraintSpec(gap=gap, min_part=low, fixed_length=length)
        found.extend(partitions(n, spec))
        length += 1
    found.sort(key=lambda p: p.parts, reverse=True)
    yield from found
