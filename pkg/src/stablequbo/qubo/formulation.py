"""The penalty QUBO of the stable set problem, Q = -I + βA, with exact cost accounting.

All costs are exact rationals. Hot loops work on integer-scaled costs instead: with
β = p/q, ``q * cost(X, β) = -q|X| + 2p|E(G[X])|`` is an integer for every X.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import AbstractSet, Iterator, Optional, Tuple, Union

import numpy as np

from stablequbo.config import settings
from stablequbo.core.errors import EnumerationLimitError, InvalidPenaltyError
from stablequbo.core.graph import (
    Graph,
    VertexSet,
    check_vertices,
    induced_edge_count,
    iter_bits,
    to_mask,
)

Penalty = Fraction
PenaltyLike = Union[Fraction, int, float, str]

HALF = Fraction(1, 2)


def as_penalty(value: PenaltyLike) -> Penalty:
    """Parse a positive exact rational from ``1/2``, ``0.5``, ``2`` or a Fraction.

    Floats go through their shortest decimal repr, so ``0.1`` means 1/10.
    """
    try:
        beta = Fraction(str(value)) if isinstance(value, float) else Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as e:
        raise InvalidPenaltyError(f"cannot parse penalty {value!r}: {e}") from None
    if beta <= 0:
        raise InvalidPenaltyError(f"penalty must be positive, got {beta}")
    return beta


def format_fraction(value: Fraction) -> str:
    """``p/q``, or ``p`` for integers."""
    return str(Fraction(value))


def post_penalty(beta: Penalty) -> Penalty:
    """Penalty used when re-solving samples: β itself when β >= 1/2, otherwise 1/2."""
    return beta if beta >= HALF else HALF


def scaled_penalty(beta: Penalty) -> Tuple[int, int]:
    """``(q, 2p)`` for β = p/q, the integer weights of a vertex and of an edge."""
    return beta.denominator, 2 * beta.numerator


@dataclass(frozen=True)
class QuboInstance:
    """Q = -I + βA over the vertices of ``source``; stored sparsely, densified on demand."""

    source: Graph
    beta: Penalty

    @property
    def n(self) -> int:
        return self.source.n

    def entries(self) -> Iterator[Tuple[int, int, Fraction]]:
        """Upper triangle of Q including the diagonal, row-major."""
        minus_one = Fraction(-1)
        for i in range(self.n):
            yield i, i, minus_one
            for j in self.source.neighbors(i):
                if j > i:
                    yield i, j, self.beta

    def to_dense(self) -> np.ndarray:
        """Symmetric n x n object array of Fractions."""
        q = np.full((self.n, self.n), Fraction(0), dtype=object)
        for i, j, value in self.entries():
            q[i, j] = q[j, i] = value
        return q

    def evaluate(self, x: AbstractSet[int]) -> Fraction:
        """x^T Q x for the indicator vector of ``x``, summed from the dense matrix."""
        check_vertices(self.source, x)
        idx = sorted(x)
        if not idx:
            return Fraction(0)
        return Fraction(self.to_dense()[np.ix_(idx, idx)].sum())


def build_qubo(g: Graph, beta: PenaltyLike) -> QuboInstance:
    return QuboInstance(g, as_penalty(beta))


def cost(g: Graph, x: AbstractSet[int], beta: PenaltyLike) -> Fraction:
    """cost(X, β) = -|X| + 2β|E(G[X])|, exactly."""
    beta = as_penalty(beta)
    return -len(x) + 2 * beta * induced_edge_count(g, x)


def export_qubo(instance: QuboInstance) -> str:
    """``i j value`` triples, 0-based, upper triangle with diagonal, values as p/q."""
    return "".join(
        f"{i} {j} {format_fraction(value)}\n" for i, j, value in instance.entries()
    )


def _greedy_stable_mask(g: Graph) -> int:
    chosen = blocked = 0
    for v in sorted(range(g.n), key=lambda v: (g.degrees[v], v)):
        if not blocked >> v & 1:
            chosen |= 1 << v
            blocked |= g.masks[v] | 1 << v
    return chosen


def exact_qubo_optimum(g: Graph, beta: PenaltyLike) -> Tuple[VertexSet, Fraction]:
    """Global minimiser of x^T(-I + βA)x by exhaustive search with bounding.

    Ties are broken towards the lexicographically smallest indicator vector
    ``(x_0, x_1, ...)``, so the search branches on ``x_i = 0`` before ``x_i = 1``.

    Parameters
    ----------
    g : Graph
        Graph with at most ``settings.ENUMERATION_LIMIT`` vertices
    beta : PenaltyLike
        Penalty parameter

    Returns
    -------
    Tuple[VertexSet, Fraction]
        Minimiser and its cost; minus the cost is α(G, β)
    """
    beta = as_penalty(beta)
    n = g.n
    if n > settings.ENUMERATION_LIMIT:
        raise EnumerationLimitError(
            f"exhaustive QUBO search is capped at {settings.ENUMERATION_LIMIT} vertices, got {n}"
        )
    q, two_p = scaled_penalty(beta)
    masks, full = g.masks, g.full_mask
    # a vertex already touching the chosen set gains at most q - 2p
    touched_gain = max(0, q - two_p)

    greedy = _greedy_stable_mask(g)
    cutoff = -q * greedy.bit_count() + 1
    best_mask: Optional[int] = None

    def search(i: int, chosen: int, cover: int, value: int) -> None:
        nonlocal cutoff, best_mask
        rest = full & ~((1 << i) - 1)
        free, touched = (rest & ~cover).bit_count(), (rest & cover).bit_count()
        if value - q * free - touched_gain * touched >= cutoff:
            return
        if i == n:
            cutoff, best_mask = value, chosen
            return
        search(i + 1, chosen, cover, value)
        delta = -q + two_p * (masks[i] & chosen).bit_count()
        search(i + 1, chosen | 1 << i, cover | masks[i], value + delta)

    search(0, 0, 0, 0)
    assert best_mask is not None
    return frozenset(iter_bits(best_mask)), Fraction(cutoff, q)


def drop_conflict_endpoint(g: Graph, x: AbstractSet[int]) -> VertexSet:
    """Remove the larger endpoint of the first edge inside ``x``; ``x`` if it is stable.

    For β >= 1/2 a single removal never increases cost(X, β).
    """
    check_vertices(g, x)
    xmask = to_mask(x)
    for u in sorted(x):
        clash = g.masks[u] & xmask
        if clash:
            v = max(u, clash.bit_length() - 1)
            return frozenset(x) - {v}
    return frozenset(x)


def extraction_gap(g: Graph, x: AbstractSet[int], beta: PenaltyLike) -> Fraction:
    """(|X| - |E(G[X])|) + cost(X, β): how much the cost undersells the extractable set."""
    return len(x) - induced_edge_count(g, x) + cost(g, x, beta)

