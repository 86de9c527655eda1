from .experiment import run_cell, run_experiment
from .instances import LoadedInstance, load_instance
from .registry import (
    KNOWN_ALPHA,
    KNOWN_PARTITION_COSTS,
    KNOWN_PARTITIONS_SOLVED,
    known_alpha,
    known_partition_cost,
    normalize_name,
)
from .reports import FORMATS, emit_report, parse_json_report
from .spec import ExperimentSpec

__all__ = [
    "ExperimentSpec",
    "FORMATS",
    "KNOWN_ALPHA",
    "KNOWN_PARTITION_COSTS",
    "KNOWN_PARTITIONS_SOLVED",
    "LoadedInstance",
    "emit_report",
    "known_alpha",
    "known_partition_cost",
    "load_instance",
    "normalize_name",
    "parse_json_report",
    "run_cell",
    "run_experiment",
]
