"""Core-halo partitions of a stable set instance.

Halos are neighbourhoods in the complement graph Ḡ, where stable sets of G are cliques.
Ḡ is never materialised: its neighbourhood of v restricted to ``candidates`` is
``candidates & ~N_G(v) & ~{v}``, which the bitmask adjacency of G answers directly.
"""

from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from typing import Iterator, Literal, Optional, Sequence, Tuple

from stablequbo.core.errors import InvalidOrderingError, SizeGuardError
from stablequbo.core.graph import Graph, VertexSet, edge_density, induced, iter_bits
from stablequbo.core.models import PartitionCostRow
from stablequbo.samplers.exact import exact_alpha

Variant = Literal["regular", "simple"]

VERIFY_LIMIT = 16


@dataclass(frozen=True, slots=True)
class PartitionEntry:
    core: int
    halo: VertexSet

    @property
    def vertices(self) -> VertexSet:
        return self.halo | {self.core}

    @property
    def size(self) -> int:
        return len(self.halo) + 1


@dataclass(frozen=True)
class ChPartition:
    """Ordered (core, halo) pairs with singleton cores, one per vertex.

    Parameters
    ----------
    entries : Tuple[PartitionEntry, ...]
        One entry per vertex, in ordering sequence
    ordering : Tuple[int, ...]
        The vertex permutation the partition was built from
    variant : Variant
        ``regular``: H_i is the whole Ḡ-neighbourhood of v_i; ``simple``: vertices
        v_1, ..., v_i are excluded from it
    """

    entries: Tuple[PartitionEntry, ...]
    ordering: Tuple[int, ...]
    variant: Variant

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[PartitionEntry]:
        return iter(self.entries)


def check_ordering(g: Graph, ordering: Sequence[int]) -> Tuple[int, ...]:
    ordering = tuple(ordering)
    if sorted(ordering) != list(range(g.n)):
        raise InvalidOrderingError(f"ordering is not a permutation of 0..{g.n - 1}")
    return ordering


def complement_degree_order(g: Graph) -> Tuple[int, ...]:
    """Vertices by ascending degree in Ḡ (descending degree in G), ties by id."""
    return tuple(sorted(range(g.n), key=lambda v: (g.n - 1 - g.degrees[v], v)))


def complement_neighbors(g: Graph, v: int, candidates: int) -> int:
    """Bitmask of N_Ḡ(v) within ``candidates``."""
    return candidates & ~g.masks[v] & ~(1 << v)


def iter_simple_entries(g: Graph, ordering: Sequence[int]) -> Iterator[PartitionEntry]:
    """Entries of the simple partition, built one at a time."""
    remaining = g.full_mask
    for v in ordering:
        remaining &= ~(1 << v)
        yield PartitionEntry(v, frozenset(iter_bits(complement_neighbors(g, v, remaining))))


def simple_ch_partition(g: Graph, ordering: Optional[Sequence[int]] = None) -> ChPartition:
    """H_i = N_Ḡ(v_i) minus {v_1, ..., v_i}; every maximum stable set of G lies in exactly
    one C_i ∪ H_i, namely the one whose core is its earliest vertex in the ordering."""
    ordering = check_ordering(g, complement_degree_order(g) if ordering is None else ordering)
    return ChPartition(tuple(iter_simple_entries(g, ordering)), ordering, "simple")


def regular_ch_partition(g: Graph, ordering: Optional[Sequence[int]] = None) -> ChPartition:
    """H_i = N_Ḡ(v_i); the partition with s = n singleton cores."""
    ordering = check_ordering(g, complement_degree_order(g) if ordering is None else ordering)
    full = g.full_mask
    entries = tuple(
        PartitionEntry(v, frozenset(iter_bits(complement_neighbors(g, v, full))))
        for v in ordering
    )
    return ChPartition(entries, ordering, "regular")


def partition_cost(p: ChPartition) -> int:
    """max_i |C_i| + |H_i|."""
    return max((entry.size for entry in p), default=0)


def simple_partition_cost(g: Graph, ordering: Optional[Sequence[int]] = None) -> int:
    """Cost of the simple partition without keeping its entries."""
    ordering = check_ordering(g, complement_degree_order(g) if ordering is None else ordering)
    return max((entry.size for entry in iter_simple_entries(g, ordering)), default=0)


def regular_partition_cost(g: Graph) -> int:
    """Δ(Ḡ) + 1, the cost of the regular partition under any ordering."""
    return g.n - min(g.degrees) if g.n else 0


def _percent(part: int, whole: int) -> int:
    if not whole:
        return 0
    ratio = Decimal(100 * part) / Decimal(whole)
    return int(ratio.quantize(Decimal(1), rounding=ROUND_HALF_UP))


def partition_cost_row(name: str, g: Graph) -> PartitionCostRow:
    """Regular against simple partition cost for one instance, degree ordering."""
    regular = regular_partition_cost(g)
    simple = simple_partition_cost(g)
    return PartitionCostRow(
        instance=name,
        n=g.n,
        m=g.m,
        d=edge_density(g),
        regular=regular,
        simple=simple,
        diff=regular - simple,
        reduction=_percent(regular - simple, regular),
    )


def containing_entries(p: ChPartition, w: VertexSet) -> Tuple[int, ...]:
    """Indices j with W ⊆ C_j ∪ H_j."""
    return tuple(j for j, entry in enumerate(p) if w <= entry.vertices)


def verify_partition_covering(g: Graph, p: ChPartition) -> bool:
    """max_i α(G[C_i ∪ H_i]) == α(G), both computed exactly; small graphs only."""
    if g.n > VERIFY_LIMIT:
        raise SizeGuardError(f"covering check is limited to {VERIFY_LIMIT} vertices, got {g.n}")
    alpha = exact_alpha(g).alpha
    best = max(
        (exact_alpha(induced(g, entry.vertices).subgraph).alpha for entry in p), default=0
    )
    return best == alpha
