"""Exact stability number by branch and bound, and the sampler that wraps it."""

from dataclasses import dataclass
from typing import List, Literal, Optional, Sequence

from loguru import logger

from stablequbo.config import settings
from stablequbo.core.graph import Graph, VertexSet, annihilation_bound, iter_bits
from stablequbo.qubo import (
    HALF,
    Penalty,
    SampleSet,
    exact_qubo_optimum,
    make_sample,
    sample_from_mask,
)
from stablequbo.samplers.base import SamplerConfig, SamplerContract

Status = Literal["optimal", "budget_exhausted"]


@dataclass(frozen=True, slots=True)
class ExactResult:
    """α(G) with a witness; ``alpha`` is only a lower bound unless ``status == "optimal"``."""

    alpha: int
    witness: VertexSet
    status: Status
    nodes: int

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"


class _BudgetExhausted(Exception):
    pass


def clique_cover_bound(masks: Sequence[int], mask: int) -> int:
    """Number of cliques in a greedy clique cover of G[mask]; at least α(G[mask])."""
    commons: List[int] = []  # vertices adjacent to every member, one mask per clique
    for v in iter_bits(mask):
        for k, common in enumerate(commons):
            if common >> v & 1:
                commons[k] = common & masks[v]
                break
        else:
            commons.append(masks[v] & mask)
    return len(commons)


def exact_alpha(g: Graph, node_budget: Optional[int] = None) -> ExactResult:
    """Maximum stable set by the recursion α(G) = max(α(G - v), 1 + α(G - N[v])).

    Branches on a vertex of maximum degree (ties by lowest id); vertices of degree at most
    one are taken without branching. Above ``settings.EXHAUSTIVE_LIMIT`` vertices, subtrees
    are pruned with the incumbent against the annihilation number and a greedy clique cover
    of the remaining graph.

    Parameters
    ----------
    g : Graph
        Input graph
    node_budget : Optional[int]
        Maximum number of search nodes, ``settings.EXACT_NODE_BUDGET`` by default

    Returns
    -------
    ExactResult
        Best stable set found, with ``status="budget_exhausted"`` if the search was cut short
    """
    budget = settings.EXACT_NODE_BUDGET if node_budget is None else node_budget
    masks = g.masks
    prune = g.n > settings.EXHAUSTIVE_LIMIT
    best, witness, nodes = 0, 0, 0

    def search(mask: int, size: int, chosen: int) -> None:
        nonlocal best, witness, nodes
        nodes += 1
        if nodes > budget:
            raise _BudgetExhausted
        # forced moves: isolated and pendant vertices belong to some maximum stable set
        while True:
            forced = next(
                (v for v in iter_bits(mask) if (masks[v] & mask).bit_count() <= 1), None
            )
            if forced is None:
                break
            size += 1
            chosen |= 1 << forced
            mask &= ~(masks[forced] | 1 << forced)
        if not mask:
            if size > best:
                best, witness = size, chosen
            return
        if prune:
            remaining = mask.bit_count()
            if size + remaining <= best or size + annihilation_bound(g, mask) <= best:
                return
            if size + clique_cover_bound(masks, mask) <= best:
                return
        v = max(iter_bits(mask), key=lambda u: ((masks[u] & mask).bit_count(), -u))
        search(mask & ~(masks[v] | 1 << v), size + 1, chosen | 1 << v)
        search(mask & ~(1 << v), size, chosen)

    status: Status = "optimal"
    try:
        search(g.full_mask, 0, 0)
    except _BudgetExhausted:
        status = "budget_exhausted"
        logger.warning(
            f"exact search on n={g.n} stopped after {budget} nodes; best so far {best}"
        )
    return ExactResult(best, frozenset(iter_bits(witness)), status, min(nodes, budget))


class ExactSampler(SamplerContract):
    """Returns ``reads`` copies of a global QUBO minimiser.

    For β >= 1/2 the minimiser is a maximum stable set; below 1/2 the QUBO itself is
    enumerated, which is capped at ``settings.ENUMERATION_LIMIT`` vertices.
    """

    name = "exact"

    def __init__(self, node_budget: Optional[int] = None) -> None:
        self.node_budget = node_budget

    def _sample(self, g: Graph, beta: Penalty, config: SamplerConfig) -> SampleSet:
        if beta >= HALF:
            result = exact_alpha(g, self.node_budget)
            sample = make_sample(g, [int(v in result.witness) for v in range(g.n)], beta)
        else:
            x, _ = exact_qubo_optimum(g, beta)
            sample = sample_from_mask(g, sum(1 << v for v in x), beta)
        return SampleSet.from_samples([sample] * config.reads, beta, config.reads)
