"""Resolving instance identifiers to stable set instances."""

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from stablequbo.config import settings
from stablequbo.core.dimacs import read_dimacs
from stablequbo.core.errors import InstanceFetchError
from stablequbo.core.generators import paley_graph
from stablequbo.core.graph import Graph, complement
from stablequbo.harness.registry import normalize_name

PALEY = re.compile(r"^paley:(\d+)$")


@dataclass(frozen=True)
class LoadedInstance:
    name: str
    graph: Graph
    complemented: bool


def resolve_path(identifier: str, base_dir: Optional[Path] = None) -> Path:
    """Path of a DIMACS instance: as given, relative to ``base_dir``, or in the cache."""
    candidates = [Path(identifier)]
    if base_dir is not None:
        candidates.append(base_dir / identifier)
    for suffix in ("", ".clq", ".col"):
        candidates.append(settings.CACHE_DIR / f"{identifier}{suffix}")
    for path in candidates:
        if path.is_file():
            return path
    raise InstanceFetchError(
        f"instance {identifier!r} not found locally or in {settings.CACHE_DIR}"
    )


def load_instance(
    identifier: str, complement_graph: bool = True, base_dir: Optional[Path] = None
) -> LoadedInstance:
    """Load ``paley:<q>`` or a DIMACS file, complementing DIMACS graphs when asked.

    Paley graphs are self-complementary benchmarks and are never complemented.
    """
    match = PALEY.match(identifier.strip())
    if match:
        q = int(match.group(1))
        try:
            return LoadedInstance(f"paley{q}", paley_graph(q), False)
        except ValueError as e:
            raise InstanceFetchError(f"cannot build {identifier!r}: {e}") from e
    path = resolve_path(identifier, base_dir)
    g = read_dimacs(path)
    name = normalize_name(path.name)
    if complement_graph:
        return LoadedInstance(name, complement(g), True)
    return LoadedInstance(name, g, False)
