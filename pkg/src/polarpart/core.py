"""Partition value type, family predicates and per-partition statistics."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional


@dataclass(frozen=True)
class Partition:
    """An integer partition stored as a non-increasing tuple of positive parts."""

    parts: tuple[int, ...]
    weight: int = field(init=False, compare=False)
    length: int = field(init=False, compare=False)

    def __post_init__(self):
        parts = tuple(self.parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be non-increasing, got {parts}")
        if parts and parts[-1] < 1:
            raise ValueError(f"parts must be positive, got {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "weight", sum(parts))
        object.__setattr__(self, "length", len(parts))

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return self.length

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self):
        return format_partition(self)

    @property
    def smallest(self) -> Optional[int]:
        return self.parts[-1] if self.parts else None


@dataclass(frozen=True)
class PolarizationProfile:
    odd_count: int
    smallest_even: Optional[int]
    residue_counts: dict[int, int]
    modulus: int


@dataclass(frozen=True)
class ConstraintSpec:
    """Selects a partition family: adjacent gap >= ``gap``, smallest part >= ``min_part``,
    and optionally exactly ``fixed_length`` parts.

    ``gap=0`` is the unrestricted family, ``gap=1`` distinct parts.
    """

    gap: int = 0
    min_part: int = 1
    fixed_length: Optional[int] = None

    def __post_init__(self):
        if self.gap < 0:
            raise ValueError("gap must be >= 0")
        if self.min_part < 1:
            raise ValueError("min_part must be >= 1")
        if self.fixed_length is not None and self.fixed_length < 0:
            raise ValueError("fixed_length must be >= 0")

    @property
    def modulus_q(self) -> int:
        return self.gap - self.gap % 2

    def admits(self, p: Partition) -> bool:
        if self.fixed_length is not None and p.length != self.fixed_length:
            return False
        if p.parts and p.parts[-1] < self.min_part:
            return False
        return is_d_distant(p, self.gap)


def make_partition(parts: Iterable[int]) -> Partition:
    parts = [int(x) for x in parts]
    bad = [x for x in parts if x <= 0]
    if bad:
        raise ValueError(f"parts must be positive integers, got {bad[0]}")
    return Partition(tuple(sorted(parts, reverse=True)))


def parse_partition(text: str) -> Partition:
    """Parse the comma-separated text form; the empty string is the empty partition."""
    text = text.strip()
    if not text:
        return Partition(())
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"not a comma-separated list of integers: {text!r}") from None
    return make_partition(parts)


def format_partition(p: Partition) -> str:
    return ",".join(str(x) for x in p.parts)


def is_d_distant(p: Partition, d: int) -> bool:
    parts = p.parts
    return all(a - b >= d for a, b in zip(parts, parts[1:]))


def is_distinct(p: Partition) -> bool:
    return is_d_distant(p, 1)


def profile(p: Partition, q: int = 2) -> PolarizationProfile:
    if q < 1:
        raise ValueError("modulus must be >= 1")
    residues = dict.fromkeys(range(q), 0)
    for x in p.parts:
        residues[x % q] += 1
    evens = [x for x in p.parts if x % 2 == 0]
    return PolarizationProfile(
        odd_count=sum(x % 2 for x in p.parts),
        smallest_even=min(evens) if evens else None,
        residue_counts=residues,
        modulus=q,
    )


def is_polarized(p: Partition) -> bool:
    """Distinct parts, and the smallest even part (if any) exceeds twice the odd count."""
    if not is_distinct(p):
        return False
    prof = profile(p, 2)
    return prof.smallest_even is None or prof.smallest_even > 2 * prof.odd_count


def bressoud_condition(p: Partition, d: int) -> bool:
    """For each residue class i = 1..d (class d meaning 0 mod d), the smallest part in
    that class exceeds d times the number of parts lying in classes 1..i-1.
    Empty classes pass vacuously."""
    if d < 2:
        raise ValueError("d must be >= 2")
    if not is_distinct(p):
        raise ValueError(f"parts must be distinct: {format_partition(p)}")
    counts = [0] * (d + 1)
    smallest = [None] * (d + 1)
    for x in p.parts:
        cls = x % d or d
        counts[cls] += 1
        smallest[cls] = x  # parts are descending, so the last seen is the smallest
    below = 0
    for i in range(1, d + 1):
        if smallest[i] is not None and smallest[i] <= d * below:
            return False
        below += counts[i]
    return True


def in_s_class(p: Partition, d: int) -> bool:
    """Membership in the class with smallest part >= 1 + (l-1)q/2, q = d - (d mod 2);
    odd d additionally requires distinct parts."""
    if d < 2:
        raise ValueError("d must be >= 2")
    if not p.parts:
        return True
    q = d - d % 2
    # min >= 1 + (l-1)q/2, kept integral since q is even
    if p.parts[-1] < 1 + (p.length - 1) * (q // 2):
        return False
    return d % 2 == 0 or is_distinct(p)


def durfee_side(p: Partition) -> int:
    s = 0
    for i, x in enumerate(p.parts, start=1):
        if x >= i:
            s = i
        else:
            break
    return s
