"""Published reference values for the benchmark instances.

Stability numbers refer to the stable set instance, i.e. the complement of the DIMACS
clique graph (Paley graphs are used as generated). Every value carries the benchmark group
it was reported with: ``small`` (direct runs up to n = 125), ``large`` (direct runs at
n = 800 and 1500) and ``partitioned`` (runs through the partition solver).
"""

import re
from dataclasses import dataclass
from typing import Dict, Literal, Optional

Group = Literal["small", "large", "partitioned"]


@dataclass(frozen=True, slots=True)
class KnownAlpha:
    alpha: int
    group: Group


@dataclass(frozen=True, slots=True)
class KnownPartitionCost:
    """Regular and simple partition costs at s = n, degree ordering."""

    n: int
    m: int
    regular: int
    simple: int


def normalize_name(name: str) -> str:
    """Canonical instance name: lower case, ``-`` and ``.`` folded to ``_``, no extension."""
    stem = re.sub(r"\.(clq|col|txt)(\.b)?$", "", name.strip().lower())
    return re.sub(r"[-.]", "_", stem)


def _entries(group: Group, values: Dict[str, int]) -> Dict[str, KnownAlpha]:
    return {normalize_name(k): KnownAlpha(v, group) for k, v in values.items()}


KNOWN_ALPHA: Dict[str, KnownAlpha] = {
    **_entries(
        "small",
        {
            "C125.9": 34,
            "dsjc125.5": 10,
            "dsjc125.9": 34,
            "evil_chv12x10": 20,
            "evil_myc5x24": 48,
            "evil_myc11x11": 22,
            "evil_s3m25x5": 20,
            "hamming6-2": 32,
            "hamming6-4": 4,
            "johnson8-2-4": 4,
            "johnson8-4-4": 14,
            "johnson16-2-4": 8,
            "MANN_a9": 16,
            "paley61": 5,
            "paley73": 5,
            "paley89": 5,
            "paley97": 6,
            "paley101": 5,
        },
    ),
    **_entries(
        "large",
        {
            "brock800_1": 23,
            "brock800_2": 24,
            "brock800_3": 25,
            "brock800_4": 26,
            "p_hat1500-1": 12,
            "p_hat1500-2": 65,
            "p_hat1500-3": 94,
        },
    ),
    **_entries(
        "partitioned",
        {
            "keller4": 11,
            "brock200_1": 21,
            "brock200_2": 12,
            "brock200_3": 15,
            "brock200_4": 17,
            "san200_0.7_1": 30,
            "san200_0.7_2": 18,
            "sanr200_0.7": 18,
            "c-fat200-1": 12,
            "c-fat200-2": 24,
            "c-fat200-5": 58,
            "c-fat500-1": 14,
            "c-fat500-2": 26,
            "c-fat500-5": 64,
            "p_hat500-1": 9,
        },
    ),
}

KNOWN_PARTITION_COSTS: Dict[str, KnownPartitionCost] = {
    normalize_name(name): KnownPartitionCost(*values)
    for name, values in {
        "brock200_1": (200, 5066, 166, 136),
        "brock200_2": (200, 10024, 115, 87),
        "brock200_3": (200, 7852, 135, 109),
        "brock200_4": (200, 6811, 148, 120),
        "keller4": (171, 5100, 125, 103),
        "p_hat500-1": (500, 93181, 205, 95),
        "san200_0.7_1": (200, 5970, 156, 131),
        "san200_0.7_2": (200, 5970, 165, 123),
        "sanr200_0.7": (200, 6032, 162, 127),
        "c-fat200-1": (200, 18366, 18, 17),
        "c-fat200-2": (200, 16665, 35, 33),
        "c-fat200-5": (200, 11427, 87, 84),
        "c-fat500-1": (500, 120291, 21, 20),
        "c-fat500-2": (500, 115611, 39, 38),
        "c-fat500-5": (500, 101559, 96, 93),
    }.items()
}

# partitions actually solved in the published partitioned runs, where reported
KNOWN_PARTITIONS_SOLVED: Dict[str, int] = {
    normalize_name(name): solved
    for name, solved in {
        "c-fat200-1": 3,
        "c-fat200-2": 3,
        "c-fat200-5": 3,
        "c-fat500-1": 3,
        "c-fat500-2": 3,
        "c-fat500-5": 3,
        "keller4": 147,
        "p_hat500-1": 470,
    }.items()
}


def known_alpha(name: str) -> Optional[int]:
    entry = KNOWN_ALPHA.get(normalize_name(name))
    return entry.alpha if entry else None


def known_partition_cost(name: str) -> Optional[KnownPartitionCost]:
    return KNOWN_PARTITION_COSTS.get(normalize_name(name))
