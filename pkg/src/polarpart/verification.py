"""Identity harness: enumeration counts on one side, independent counters on the other.

Each identity is swept over n = 1..n_max. When a row disagrees, the smallest failing
row gets a witness partition that is counted by exactly one side.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from . import counting
from .bijection import forward_map, inverse_map, weight_offset
from .core import (
    ConstraintSpec,
    Partition,
    bressoud_condition,
    format_partition,
    is_polarized,
    profile,
)
from .enumeration import distinct_partitions, partitions, polarized_partitions, s_class_partitions

IDENTITIES = (
    "thm1", "eq2", "eq3", "eq4", "eq5", "thm2", "cor1", "eq10", "eq11",
    "thm3", "cor2", "lemma_maxlen", "bressoud", "bijection_roundtrip",
)

# identities whose (d, r) is fixed by the statement itself
FIXED_PARAMS = {
    "thm1": (2, 1), "eq2": (2, 1), "eq4": (2, 1),
    "eq3": (3, 1), "eq5": (3, 1), "thm2": (3, 1), "cor1": (3, 2),
    "eq10": (4, 1), "eq11": (4, 2),
}


@dataclass
class Row:
    n: int
    lhs: int
    rhs: int
    equal: bool
    witness: Optional[str] = None

    def to_dict(self) -> dict:
        out = {"n": self.n, "lhs": self.lhs, "rhs": self.rhs, "equal": self.equal}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class IdentityReport:
    identity: str
    d: Optional[int]
    r: Optional[int]
    n_from: int
    n_to: int
    rows: list[Row] = field(default_factory=list)

    @property
    def all_equal(self) -> bool:
        return all(row.equal for row in self.rows)

    def first_failure(self) -> Optional[Row]:
        return next((row for row in self.rows if not row.equal), None)

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "params": {"d": self.d, "r": self.r},
            "range": {"from": self.n_from, "to": self.n_to},
            "rows": [row.to_dict() for row in self.rows],
            "all_equal": self.all_equal,
        }

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "lhs", "rhs", "equal"])
        for row in self.rows:
            writer.writerow([row.n, row.lhs, row.rhs, str(row.equal).lower()])
        return buf.getvalue()

    def to_table(self) -> str:
        header = ["n", "lhs", "rhs", "equal", "witness"]
        body = [[str(row.n), str(row.lhs), str(row.rhs), "yes" if row.equal else "NO",
                 row.witness or ""] for row in self.rows]
        widths = [max(len(x) for x in col) for col in zip(header, *body)]
        lines = [f"# {self.identity}  d={self.d} r={self.r}  n={self.n_from}..{self.n_to}"]
        for cells in [header] + body:
            lines.append("  ".join(c.rjust(w) for c, w in zip(cells, widths)).rstrip())
        lines.append(f"# all_equal: {str(self.all_equal).lower()}")
        return "\n".join(lines)


# -- brute-force sides -------------------------------------------------------

@lru_cache(maxsize=None)
def enumerated_count(n: int, d: int, r: int = 1) -> int:
    return sum(1 for _ in partitions(n, ConstraintSpec(gap=d, min_part=r)))


def bressoud_count(n: int, d: int) -> int:
    return sum(1 for p in distinct_partitions(n) if bressoud_condition(p, d))


def definitional_max_length(n: int, d: int) -> int:
    """Largest l such that the sparsest d-distant partition 1, 1+d, ..., 1+(l-1)d fits in n."""
    length = 0
    while (length + 1) + d * (length + 1) * length // 2 <= n:
        length += 1
    return length


def count_parts_in_residues(n: int, modulus: int, residues) -> int:
    """Partitions of n into parts congruent to one of ``residues`` mod ``modulus``."""
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        if part % modulus in residues:
            for m in range(part, n + 1):
                ways[m] += ways[m - part]
    return ways[n]


# -- transports used to locate witnesses --------------------------------------

def s_class_transport(p: Partition, d: int) -> Partition:
    """Weight-preserving map from d-distant partitions into the S-class for d."""
    l = p.length
    half_q = (d - d % 2) // 2
    extra = 1 if d % 2 else 0
    return Partition(tuple(
        x - d * (l - j) + (l - 1) * half_q + extra * (l - j)
        for j, x in enumerate(p.parts, start=1)
    ))


def _polarized_targets(n: int, d: int, r: int) -> set[Partition]:
    targets = set()
    for i, m, _ in counting.theorem3_terms(n, d, r):
        targets.update(polarized_partitions(m, i))
    return targets


def _set_witness(lhs_set, rhs_set, lhs_larger: bool) -> Optional[str]:
    extra = (lhs_set - rhs_set) if lhs_larger else (rhs_set - lhs_set)
    if not extra:
        return None
    return format_partition(max(extra, key=lambda p: p.parts))


def _transport_witness(n: int, d: int, r: int, transport, rhs_set, lhs_larger: bool) -> Optional[str]:
    seen = {}
    for lam in partitions(n, ConstraintSpec(gap=d, min_part=r)):
        try:
            image = transport(lam)
        except ValueError:
            return format_partition(lam)
        if image not in rhs_set or image in seen:
            return format_partition(lam)
        seen[image] = lam
    return _set_witness(set(seen), rhs_set, lhs_larger)


def _find_witness(identity: str, n: int, d: int, r: int, lhs: int, rhs: int) -> Optional[str]:
    lhs_larger = lhs > rhs
    if identity in ("thm1", "thm2", "cor1", "eq10", "eq11", "thm3", "cor2"):
        return _transport_witness(n, d, r, lambda p: forward_map(p, d, r),
                                  _polarized_targets(n, d, r), lhs_larger)
    if identity in ("eq2", "eq3", "eq4", "eq5"):
        return _transport_witness(n, d, r, lambda p: s_class_transport(p, d),
                                  set(s_class_partitions(n, d)), lhs_larger)
    if identity == "bressoud":
        lhs_set = {p for p in distinct_partitions(n) if bressoud_condition(p, d)}
        rhs_set = set(partitions(n, ConstraintSpec(gap=d)))
        return _set_witness(lhs_set, rhs_set, lhs_larger)
    if identity == "lemma_maxlen":
        if lhs == 0:
            return None
        parts = [1 + d * (lhs - j) for j in range(1, lhs + 1)]
        parts[0] += n - sum(parts)
        return format_partition(Partition(tuple(parts)))
    return None


# -- per-identity row computation ---------------------------------------------

def _sides(identity: str, n: int, d: int, r: int) -> tuple[int, int]:
    if identity == "thm1":
        return enumerated_count(n, 2), counting.count_polarized(n)
    if identity in ("eq2", "eq3"):
        return enumerated_count(n, d), counting.count_s_class(n, d)
    if identity == "eq4":
        return enumerated_count(n, 2), counting.rhs_durfee_d2(n)
    if identity == "eq5":
        return enumerated_count(n, 3), counting.rhs_durfee_d3(n)
    if identity in ("thm2", "cor1", "eq10", "eq11", "thm3", "cor2"):
        return enumerated_count(n, d, r), counting.rhs_theorem3(n, d, r)
    if identity == "bressoud":
        return bressoud_count(n, d), counting.count_d_distant(n, d, 1)
    if identity == "lemma_maxlen":
        return definitional_max_length(n, d), counting.max_length(n, d)
    raise ValueError(f"unknown identity {identity!r}")


def _sides_task(args):
    return _sides(*args)


def resolve_params(identity: str, d: Optional[int], r: Optional[int]) -> tuple[Optional[int], Optional[int]]:
    """Fill in and check (d, r) for an identity."""
    if identity not in IDENTITIES:
        raise ValueError(f"unknown identity {identity!r}; choose from {', '.join(IDENTITIES)}")
    if identity in FIXED_PARAMS:
        fixed_d, fixed_r = FIXED_PARAMS[identity]
        if (d is not None and d != fixed_d) or (r is not None and r != fixed_r):
            raise ValueError(f"{identity} is stated for d={fixed_d}, r={fixed_r}")
        return fixed_d, fixed_r
    if d is None:
        raise ValueError(f"{identity} needs d")
    if identity == "lemma_maxlen":
        if d < 1:
            raise ValueError("d must be >= 1")
        if r not in (None, 1):
            raise ValueError("lemma_maxlen takes no r")
        return d, None
    if d < 2:
        raise ValueError("d must be >= 2")
    if identity in ("thm3", "bressoud"):
        if r not in (None, 1):
            raise ValueError(f"{identity} is stated for r=1; use cor2 for r > 1")
        return d, 1
    r = 1 if r is None else r
    if r < 1:
        raise ValueError("r must be >= 1")
    return d, r


def verify_identity(identity: str, n_max: int, d: Optional[int] = None,
                    r: Optional[int] = None, jobs: int = 1) -> IdentityReport:
    d, r = resolve_params(identity, d, r)
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if identity == "bijection_roundtrip":
        return verify_bijection(d, r, n_max, jobs=jobs)

    ns = range(1, n_max + 1)
    tasks = [(identity, n, d, r) for n in ns]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            sides = list(pool.map(_sides_task, tasks))
    else:
        sides = [_sides_task(t) for t in tasks]

    report = IdentityReport(identity, d, r, 1, n_max)
    for n, (lhs, rhs) in zip(ns, sides):
        report.rows.append(Row(n, lhs, rhs, lhs == rhs))
    first = report.first_failure()
    if first is not None:
        first.witness = _find_witness(identity, first.n, d, r, first.lhs, first.rhs)
    return report


def _bijection_row(args) -> Row:
    n, d, r = args
    by_length: dict[int, list[Partition]] = {}
    failure = None
    size = 0
    for lam in partitions(n, ConstraintSpec(gap=d, min_part=r)):
        size += 1
        try:
            mu = forward_map(lam, d, r)
            prof = profile(mu, 2)
            ok = (
                is_polarized(mu)
                and mu.length == lam.length
                and mu.weight == lam.weight - weight_offset(lam.length, d, r)
                and (prof.smallest_even is None or prof.smallest_even >= 2 * prof.odd_count + 2)
                and inverse_map(mu, d, r) == lam
            )
        except (ValueError, RuntimeError):
            ok = False
        if not ok:
            failure = failure or lam
            continue
        by_length.setdefault(lam.length, []).append(mu)

    expected = counting.rhs_theorem3(n, d, r)
    for i, m, count in counting.theorem3_terms(n, d, r):
        images = by_length.get(i, [])
        if len(set(images)) != len(images) or len(images) != count:
            if failure is None:
                extra = set(polarized_partitions(m, i)) ^ set(images)
                failure = max(extra, key=lambda p: p.parts) if extra else None
            break
    equal = failure is None and size == expected
    return Row(n, size, expected, equal,
               None if failure is None else format_partition(failure))


def verify_bijection(d: int, r: int, n_max: int, jobs: int = 1) -> IdentityReport:
    """Run the forward map over every d-distant partition (smallest part >= r) of
    n = 1..n_max, checking images, round trips and per-length image counts."""
    if d < 2 or r < 1:
        raise ValueError("need d >= 2 and r >= 1")
    tasks = [(n, d, r) for n in range(1, n_max + 1)]
    if jobs > 1 and tasks:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_bijection_row, tasks))
    else:
        rows = [_bijection_row(t) for t in tasks]
    report = IdentityReport("bijection_roundtrip", d, r, 1, n_max, rows)
    # keep only the smallest failing row's witness
    first = report.first_failure()
    for row in rows:
        if row is not first:
            row.witness = None
    return report

