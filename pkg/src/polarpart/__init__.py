"""Partitions with d-distant parts and their polarized counterparts."""

from .bijection import (
    ConsistencyError,
    PreconditionError,
    SplitDiagram,
    forward_map,
    inverse_map,
    parity_sort,
    split,
)
from .core import (
    ConstraintSpec,
    Partition,
    PolarizationProfile,
    bressoud_condition,
    durfee_side,
    format_partition,
    in_s_class,
    is_d_distant,
    is_polarized,
    make_partition,
    parse_partition,
    profile,
)
from .counting import (
    CountCache,
    count_d_distant,
    count_p,
    count_p_k,
    count_p_min,
    count_polarized,
    count_s_class,
    gap_reduce,
    max_length,
    rhs_durfee_d2,
    rhs_durfee_d3,
    rhs_theorem3,
    theorem3_terms,
)
from .enumeration import partitions, polarized_partitions, s_class_partitions
from .verification import IdentityReport, verify_bijection, verify_identity

__version__ = "0.1.0"
