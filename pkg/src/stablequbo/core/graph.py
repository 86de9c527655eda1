"""Simple undirected graphs and the structural primitives every other module consumes.

Vertices are identified by ``0..n-1``; the DIMACS boundary is the only place where ids are
shifted to ``1..n``. Neighbourhoods are additionally kept as integer bitmasks, which is what
the hot loops (annihilation bounds, exact search, partition halos) operate on.
"""

from dataclasses import dataclass
from decimal import Decimal
from functools import cached_property
from math import comb
from typing import AbstractSet, Iterable, Iterator, List, Sequence, Tuple

import numpy as np

from stablequbo.core.errors import VertexOutOfRangeError

VertexSet = frozenset
"""A set of vertex ids of some parent graph, ``frozenset[int]``."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    """Bitmask with one bit per vertex id."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with immutable adjacency.

    Parameters
    ----------
    n : int
        Number of vertices
    adjacency : Tuple[Tuple[int, ...], ...]
        Sorted neighbour tuple for every vertex; must be symmetric, loop-free and
        duplicate-free
    """

    n: int
    adjacency: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        if len(self.adjacency) != self.n:
            raise ValueError("adjacency must have one entry per vertex")
        for v, nbrs in enumerate(self.adjacency):
            if any(a >= b for a, b in zip(nbrs, nbrs[1:])):
                raise ValueError(f"neighbours of {v} are not strictly increasing")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise VertexOutOfRangeError(f"neighbour {u} of {v} out of range")
                if u == v:
                    raise ValueError(f"self-loop at vertex {v}")
        masks = self.masks
        for v, nbrs in enumerate(self.adjacency):
            for u in nbrs:
                if not masks[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric on edge ({v}, {u})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """Build a graph from 0-based edge pairs; duplicates and orientations collapse."""
        neighbours: List[set] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRangeError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            neighbours[u].add(v)
            neighbours[v].add(u)
        return cls(n, tuple(tuple(sorted(nbrs)) for nbrs in neighbours))

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "Graph":
        """Build a graph from per-vertex neighbour bitmasks."""
        return cls(len(masks), tuple(tuple(iter_bits(mask)) for mask in masks))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, tuple(() for _ in range(n)))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, tuple(tuple(u for u in range(n) if u != v) for v in range(n)))

    @cached_property
    def masks(self) -> Tuple[int, ...]:
        return tuple(to_mask(nbrs) for nbrs in self.adjacency)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adjacency)

    @cached_property
    def m(self) -> int:
        return sum(self.degrees) // 2

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def closed_neighborhood(self, v: int) -> VertexSet:
        return frozenset(self.adjacency[v]) | {v}

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in ascending lexicographic order."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if v > u:
                    yield u, v

    def adjacency_matrix(self) -> np.ndarray:
        """Dense 0/1 adjacency matrix A, materialised on demand."""
        a = np.zeros((self.n, self.n), dtype=np.int8)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True, slots=True)
class InducedView:
    """Subgraph G[X] together with the map from its local ids to parent ids."""

    subgraph: Graph
    mapping: Tuple[int, ...]

    def to_parent(self, local: Iterable[int]) -> VertexSet:
        return frozenset(self.mapping[a] for a in local)


def check_vertices(g: Graph, x: AbstractSet[int]) -> None:
    """Raise if any vertex id of ``x`` does not belong to ``g``."""
    for v in x:
        if not 0 <= v < g.n:
            raise VertexOutOfRangeError(f"vertex {v} out of range for n={g.n}")


def complement(g: Graph) -> Graph:
    """Graph on the same vertices whose edges are exactly the non-edges of ``g``."""
    full = g.full_mask
    return Graph.from_masks([full & ~mask & ~(1 << v) for v, mask in enumerate(g.masks)])


def induced(g: Graph, x: AbstractSet[int]) -> InducedView:
    """Subgraph induced by ``x``, local ids assigned in ascending parent-id order."""
    check_vertices(g, x)
    mapping = tuple(sorted(x))
    local = {v: a for a, v in enumerate(mapping)}
    xmask = to_mask(mapping)
    adjacency = tuple(
        tuple(local[u] for u in iter_bits(g.masks[v] & xmask)) for v in mapping
    )
    return InducedView(Graph(len(mapping), adjacency), mapping)


def induced_edge_count(g: Graph, x: AbstractSet[int]) -> int:
    """|E(G[X])|."""
    check_vertices(g, x)
    xmask = to_mask(x)
    return sum((g.masks[v] & xmask).bit_count() for v in x) // 2


def connected_components(g: Graph) -> List[VertexSet]:
    """Vertex sets of the connected components, ordered by smallest member."""
    components = []
    remaining = g.full_mask
    while remaining:
        seed = remaining & -remaining
        component = frontier = seed
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= g.masks[v]
            frontier = reach & ~component
            component |= frontier
        remaining &= ~component
        components.append(frozenset(iter_bits(component)))
    return components


def annihilation_bound(g: Graph, mask: int) -> int:
    """Annihilation number of the subgraph induced by the vertices in ``mask``."""
    degrees = sorted((g.masks[v] & mask).bit_count() for v in iter_bits(mask))
    m = sum(degrees) // 2
    a = total = 0
    for d in degrees:
        total += d
        if total > m:
            break
        a += 1
    return a


def annihilation_number(g: Graph) -> int:
    """Largest a such that the a smallest degrees sum to at most m; an upper bound on α."""
    return annihilation_bound(g, g.full_mask)


def edge_density(g: Graph) -> Decimal:
    """m / C(n, 2), unrounded; 0 below two vertices."""
    pairs = comb(g.n, 2)
    return Decimal(g.m) / Decimal(pairs) if pairs else Decimal(0)


def is_stable_set(g: Graph, x: AbstractSet[int]) -> bool:
    check_vertices(g, x)
    xmask = to_mask(x)
    return not any(g.masks[v] & xmask for v in x)


def degree_ascending_order(g: Graph) -> Tuple[int, ...]:
    """Vertices sorted by degree, ties by ascending id."""
    return tuple(sorted(range(g.n), key=lambda v: (g.degrees[v], v)))
