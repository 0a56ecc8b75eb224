"""ASCII Young diagrams."""

from __future__ import annotations

from .bijection import split
from .core import Partition


def render_plain(p: Partition, cell: str = "*") -> str:
    return "\n".join(cell * x for x in p.parts)


def render_shifted(p: Partition, d: int = 2, r: int = 1) -> str:
    """Row j indented by 2(j-1), a ``|`` at the justification line, removed
    triangle cells drawn as ``.`` just right of the line."""
    diagram = split(p, d, r)
    lines = []
    for j in range(diagram.length):
        lines.append(
            " " * (2 * j)
            + "*" * diagram.staircase_left[j]
            + "|"
            + "." * diagram.triangle[j]
            + "*" * diagram.right_parts[j]
        )
    return "\n".join(line.rstrip() for line in lines)
