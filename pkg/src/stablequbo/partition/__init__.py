from .chpartition import (
    ChPartition,
    PartitionEntry,
    check_ordering,
    complement_degree_order,
    containing_entries,
    iter_simple_entries,
    partition_cost,
    partition_cost_row,
    regular_ch_partition,
    regular_partition_cost,
    simple_ch_partition,
    simple_partition_cost,
    verify_partition_covering,
)
from .solve import solve_with_partitioning

__all__ = [
    "ChPartition",
    "PartitionEntry",
    "check_ordering",
    "complement_degree_order",
    "containing_entries",
    "iter_simple_entries",
    "partition_cost",
    "partition_cost_row",
    "regular_ch_partition",
    "regular_partition_cost",
    "simple_ch_partition",
    "simple_partition_cost",
    "solve_with_partitioning",
    "verify_partition_covering",
]
