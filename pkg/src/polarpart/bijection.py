"""Shifted-diagram bijection between d-distant partitions and polarized partitions.

Rows are indexed from the top, j = 1..l. Indenting row j by 2(j-1) cells and drawing
a vertical line that leaves one cell of the bottom row on its left splits row j into
a staircase part of 2(l-j)+1 cells and a remainder. For a d-distant partition with
smallest part >= r, a further block of (r-1) + (d-2)(l-j) cells per row is removed;
what is left is weakly decreasing and is regrouped odd-first by ``parity_sort``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Partition, format_partition, is_d_distant, is_polarized


class PreconditionError(ValueError):
    """Input lies outside the domain of a map."""


class ConsistencyError(RuntimeError):
    """An inverse did not round-trip through its forward map."""


@dataclass(frozen=True)
class SplitDiagram:
    length: int
    staircase_left: tuple[int, ...]
    right_parts: tuple[int, ...]
    triangle: tuple[int, ...]

    @property
    def weight(self) -> int:
        return sum(self.staircase_left) + sum(self.right_parts) + sum(self.triangle)


def staircase(length: int) -> tuple[int, ...]:
    return tuple(2 * (length - j) + 1 for j in range(1, length + 1))


def triangle(length: int, d: int, r: int = 1) -> tuple[int, ...]:
    return tuple((r - 1) + (d - 2) * (length - j) for j in range(1, length + 1))


def weight_offset(length: int, d: int, r: int = 1) -> int:
    return (r - 1) * length + (d - 2) * length * (length - 1) // 2


def _check_params(d: int, r: int) -> None:
    if d < 2:
        raise ValueError("d must be >= 2")
    if r < 1:
        raise ValueError("r must be >= 1")


def split(p: Partition, d: int, r: int = 1) -> SplitDiagram:
    _check_params(d, r)
    text = format_partition(p)
    if p.length == 0:
        raise PreconditionError("the empty partition has no diagram to split")
    if not is_d_distant(p, d):
        raise PreconditionError(f"({text}) is not {d}-distant")
    if p.parts[-1] < r:
        raise PreconditionError(f"({text}) has smallest part {p.parts[-1]} < {r}")
    left = staircase(p.length)
    tri = triangle(p.length, d, r)
    right = tuple(x - s - t for x, s, t in zip(p.parts, left, tri))
    return SplitDiagram(p.length, left, right, tri)


def parity_sort(values) -> tuple[int, ...]:
    """Odd entries in descending order, then even entries (zeros included) descending."""
    odd = sorted((v for v in values if v % 2), reverse=True)
    even = sorted((v for v in values if v % 2 == 0), reverse=True)
    return tuple(odd + even)


def forward_map(p: Partition, d: int, r: int = 1) -> Partition:
    """Map a d-distant partition with smallest part >= r to a polarized partition of
    the same length and weight |p| - (r-1)l - (d-2)l(l-1)/2."""
    diagram = split(p, d, r)
    rows = [s + x for s, x in zip(diagram.staircase_left, parity_sort(diagram.right_parts))]
    return Partition(tuple(sorted(rows, reverse=True)))


def inverse_map(m: Partition, d: int, r: int = 1) -> Partition:
    _check_params(d, r)
    text = format_partition(m)
    if m.length == 0:
        raise PreconditionError("the empty partition is outside the map's domain")
    if not is_polarized(m):
        raise PreconditionError(f"({text}) is not polarized")
    evens = [x for x in m.parts if x % 2 == 0]
    odds = [x for x in m.parts if x % 2]
    rows = evens + odds
    surplus = [x - s for x, s in zip(rows, staircase(m.length))]
    if any(x < 0 for x in surplus):
        raise PreconditionError(f"({text}) does not fit over the staircase")
    surplus.sort(reverse=True)
    parts = tuple(
        x + s + t for x, s, t in zip(surplus, staircase(m.length), triangle(m.length, d, r))
    )
    result = Partition(parts)
    if forward_map(result, d, r) != m:
        raise ConsistencyError(f"inverse of ({text}) gives ({format_partition(result)}), "
                               "which does not map back")
    return result
