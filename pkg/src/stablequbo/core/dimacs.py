"""Reading and writing graphs in the DIMACS clique format.

The format is ``c`` comment lines, a single ``p edge <n> <m>`` header and ``e <i> <j>`` lines
with 1-based endpoints. The declared edge count is kept for reference only: published files
are not always consistent with their own headers.
"""

import io
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, List, Optional, Set, Tuple, Union

from loguru import logger

from stablequbo.core.errors import (
    DuplicateHeaderError,
    EndpointOutOfRangeError,
    MalformedTokenError,
    MissingHeaderError,
    SelfLoopError,
)
from stablequbo.core.graph import Graph

DimacsSource = Union[bytes, str, IO[bytes], IO[str]]

HEADER_KINDS = {"edge", "col"}


@dataclass(frozen=True, slots=True)
class DimacsInstance:
    """A parsed DIMACS file: the graph plus what the header claimed."""

    graph: Graph
    declared_edges: int
    comments: Tuple[str, ...]


def _lines(source: DimacsSource) -> Iterable[str]:
    if isinstance(source, bytes):
        source = source.decode("ascii", errors="replace")
    if isinstance(source, str):
        source = io.StringIO(source)
    for raw in source:
        if isinstance(raw, bytes):
            raw = raw.decode("ascii", errors="replace")
        yield raw


def _integer(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise MalformedTokenError(lineno, f"expected an integer, got {token!r}") from None


def load_dimacs(source: DimacsSource, name: str = "<input>") -> DimacsInstance:
    """Parse a DIMACS clique file.

    Parameters
    ----------
    source : DimacsSource
        File content as bytes or str, or an open text/binary stream
    name : str, default="<input>"
        Label used in log messages

    Returns
    -------
    DimacsInstance
        Graph with exactly the declared vertex count, duplicate edges collapsed

    Raises
    ------
    DimacsParseError
        One of its subclasses, carrying the offending line number
    """
    n: Optional[int] = None
    declared = 0
    comments: List[str] = []
    edges: Set[Tuple[int, int]] = set()

    for lineno, raw in enumerate(_lines(source), start=1):
        tokens = raw.split()
        if not tokens:
            continue
        kind = tokens[0]
        if kind == "c":
            comments.append(raw.strip()[1:].strip())
        elif kind == "p":
            if n is not None:
                raise DuplicateHeaderError(lineno, "second 'p' line")
            if len(tokens) != 4 or tokens[1] not in HEADER_KINDS:
                raise MalformedTokenError(lineno, f"malformed header {raw.strip()!r}")
            n = _integer(tokens[2], lineno)
            declared = _integer(tokens[3], lineno)
            if n < 0 or declared < 0:
                raise MalformedTokenError(lineno, "negative size in header")
        elif kind == "e":
            if n is None:
                raise MissingHeaderError(lineno, "'e' line before the 'p' line")
            if len(tokens) != 3:
                raise MalformedTokenError(lineno, f"malformed edge {raw.strip()!r}")
            i, j = _integer(tokens[1], lineno), _integer(tokens[2], lineno)
            for endpoint in (i, j):
                if not 1 <= endpoint <= n:
                    raise EndpointOutOfRangeError(
                        lineno, f"endpoint {endpoint} outside [1, {n}]"
                    )
            if i == j:
                raise SelfLoopError(lineno, f"self-loop on vertex {i}")
            edges.add((min(i, j) - 1, max(i, j) - 1))
        else:
            raise MalformedTokenError(lineno, f"unknown line type {kind!r}")

    if n is None:
        raise MissingHeaderError(None, "no 'p' line found")

    if len(edges) != declared:
        logger.warning(
            f"{name}: header declares {declared} edges, file contains {len(edges)} distinct edges"
        )

    return DimacsInstance(Graph.from_edges(n, edges), declared, tuple(comments))


def parse_dimacs(source: DimacsSource, name: str = "<input>") -> Graph:
    """Parse a DIMACS clique file into a Graph."""
    return load_dimacs(source, name).graph


def read_dimacs(path: Path) -> Graph:
    with open(path, "rb") as handle:
        return parse_dimacs(handle, name=str(path))


def serialize_dimacs(g: Graph, comments: Iterable[str] = ()) -> str:
    """Emit ``p edge n m`` and ``e i j`` lines (``i < j``, lexicographic order)."""
    lines = [f"c {comment}" for comment in comments]
    lines.append(f"p edge {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def write_dimacs(path: Path, g: Graph, comments: Iterable[str] = ()) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(serialize_dimacs(g, comments))
    return path
