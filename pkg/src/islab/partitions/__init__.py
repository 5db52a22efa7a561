"""Ordered partitions, the h(Q, G) objective, quasirandomness predicates, entropy bounds."""

from .constants import (
    HierarchyConstants,
    desk_constants,
    load_constants,
    parse_constants,
    ramsey_upper_bound,
    ramsey_upper_bound_log2,
)
from .core import (
    OrderedPartition,
    deg_in,
    in_P,
    internal_nonedges,
    is_locally_optimal,
    nondeg_in,
    partition_distance,
    restrict,
)
from .entropy import binom_leq, entropy_bound_holds, entropy_report, regime_grid, xi
from .optimal import local_improve, optimal_partition
from .quasirandom import DensityWitness, f1_property, f1_witness, f2_property, min_area_for

__all__ = [
    "DensityWitness", "HierarchyConstants", "OrderedPartition", "binom_leq", "deg_in",
    "desk_constants", "entropy_bound_holds", "entropy_report", "f1_property", "f1_witness",
    "f2_property", "in_P", "internal_nonedges", "is_locally_optimal", "load_constants", "local_improve",
    "min_area_for", "nondeg_in", "optimal_partition", "parse_constants", "partition_distance",
    "ramsey_upper_bound", "ramsey_upper_bound_log2", "regime_grid", "restrict", "xi",
]
