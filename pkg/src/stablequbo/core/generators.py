"""Synthetic instances: Erdős–Rényi graphs, Paley graphs, disjoint-edge gadgets."""

import math
from fractions import Fraction

import networkx as nx

from stablequbo.core.graph import Graph


def from_networkx(nxg: nx.Graph) -> Graph:
    """Convert a networkx graph with nodes ``0..n-1``."""
    return Graph.from_edges(nxg.number_of_nodes(), nxg.edges())


def generate_random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi G(n, p), deterministic under ``seed``.

    Parameters
    ----------
    n : int
        Number of vertices
    p : float
        Edge probability in [0, 1]
    seed : int
        Seed for the networkx generator

    Returns
    -------
    Graph
        The sampled graph
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    return from_networkx(nx.gnp_random_graph(n, p, seed=seed))


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    return all(q % d for d in range(2, math.isqrt(q) + 1))


def paley_graph(q: int) -> Graph:
    """Paley graph on GF(q): u ~ v iff u - v is a nonzero quadratic residue.

    Only prime ``q`` with ``q % 4 == 1`` is supported, which keeps the relation symmetric.
    """
    if not _is_prime(q) or q % 4 != 1:
        raise ValueError(f"Paley graphs need a prime q with q = 1 mod 4, got {q}")
    residues = {x * x % q for x in range(1, q)}
    edges = ((u, v) for u in range(q) for v in range(u + 1, q) if (v - u) % q in residues)
    return Graph.from_edges(q, edges)


def disjoint_edges_graph(m: int) -> Graph:
    """Perfect matching on 2m vertices: edges (0,1), (2,3), ..."""
    return Graph.from_edges(2 * m, ((2 * i, 2 * i + 1) for i in range(m)))


def extraction_gap_graph(epsilon: Fraction) -> Graph:
    """Disjoint-edge graph with ceil(1/(2ε) + 1) edges.

    With X = V it satisfies 2ε|E(G[X])| > 1, so at β = 1/2 + ε the cost of X undershoots the
    stable set extractable from it by more than one vertex.
    """
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    return disjoint_edges_graph(math.ceil(1 / (2 * epsilon) + 1))
