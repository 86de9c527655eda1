from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence, Tuple

import networkx as nx

from stablequbo.core.generators import from_networkx, generate_random_graph
from stablequbo.core.graph import Graph


def brute_alpha(g: Graph) -> int:
    """α(G) by memoised branching on the lowest vertex; independent of the library solver."""
    masks = g.masks

    @lru_cache(maxsize=None)
    def alpha(mask: int) -> int:
        if not mask:
            return 0
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        return max(alpha(rest), 1 + alpha(rest & ~masks[v]))

    return alpha(g.full_mask)


def random_graph_suite(
    count: int, sizes: Sequence[int], ps: Sequence[float], seed: int = 0
) -> Iterator[Tuple[int, Graph]]:
    """``count`` G(n, p) graphs cycling through ``sizes`` and ``ps`` with fixed seeds."""
    for i in range(count):
        n = sizes[i % len(sizes)]
        p = ps[(i // len(sizes)) % len(ps)]
        yield i, generate_random_graph(n, p, seed=seed * 100_003 + i)


def hypercube(d: int) -> Graph:
    return from_networkx(nx.convert_node_labels_to_integers(nx.hypercube_graph(d)))


def subset_graph(n: int, w: int, shared: int) -> Graph:
    """w-subsets of {0..n-1}, adjacent when they have exactly ``shared`` elements in common."""
    subsets = [frozenset(c) for c in combinations(range(n), w)]
    edges = (
        (a, b)
        for a, b in combinations(range(len(subsets)), 2)
        if len(subsets[a] & subsets[b]) == shared
    )
    return Graph.from_edges(len(subsets), edges)


# stable set instances behind small DIMACS clique benchmarks
OFFLINE_BENCHMARKS = {
    "hamming6-2": lambda: hypercube(6),
    "johnson8-2-4": lambda: subset_graph(8, 2, 1),
    "johnson8-4-4": lambda: subset_graph(8, 4, 3),
}
