"""Turning sampler output into verified stable sets.

Samples are visited in cost order. A sample is only worth a second look when the
annihilation number of the subgraph it induces exceeds the best stable set found so far;
such samples are split into connected components and each component is re-solved on its
own, since the stability number of a disjoint union is the sum over its components.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import AbstractSet, List, Optional, Set, Tuple

from loguru import logger

from stablequbo.config import settings
from stablequbo.core.graph import (
    Graph,
    VertexSet,
    annihilation_bound,
    check_vertices,
    connected_components,
    induced,
    induced_edge_count,
    is_stable_set,
    iter_bits,
    to_mask,
)
from stablequbo.core.models import PostProcessReport, SampleDecision
from stablequbo.qubo import PenaltyLike, SampleSet, as_penalty
from stablequbo.samplers import SamplerConfig, SamplerContract, derive_seed


def extract_stable_set(g: Graph, x: AbstractSet[int]) -> VertexSet:
    """Stable subset of ``x`` obtained by deleting one endpoint per remaining conflict.

    Edges of G[X] are walked in lexicographic order; for every edge whose endpoints are both
    still present, the endpoint with the larger remaining degree is deleted (ties: higher id).
    Each deletion removes at least one edge, so at least |X| - |E(G[X])| vertices survive.
    """
    check_vertices(g, x)
    masks = g.masks
    alive = to_mask(x)
    degree = {v: (masks[v] & alive).bit_count() for v in x}
    for u in sorted(x):
        later = masks[u] & alive & ~((1 << (u + 1)) - 1)
        for v in iter_bits(later):
            if not alive >> u & 1:
                break
            if not alive >> v & 1:
                continue
            drop = max(u, v, key=lambda w: (degree[w], w))
            alive &= ~(1 << drop)
            for w in iter_bits(masks[drop] & alive):
                degree[w] -= 1
    return frozenset(iter_bits(alive))


def screen(g: Graph, x: AbstractSet[int], best: int) -> bool:
    """True iff a(G[X]) > best, i.e. X may still contain a stable set larger than best."""
    check_vertices(g, x)
    return annihilation_bound(g, to_mask(x)) > best


@dataclass(frozen=True, slots=True)
class Recomputation:
    value: int
    witness: VertexSet
    largest_component: int


def recompute_components(
    g: Graph,
    x: AbstractSet[int],
    beta_post: PenaltyLike,
    s_post: SamplerContract,
    post_config: SamplerConfig,
    sample_index: int = 0,
) -> Recomputation:
    """Re-solve every connected component of G[X] with ``s_post`` and sum the results.

    Only the best sample of each component is kept; it is repaired with
    ``extract_stable_set`` when it is not stable. Components are non-adjacent, so the
    union of their repaired sets is stable in G.
    """
    view = induced(g, x)
    witness: Set[int] = set()
    largest = 0
    for j, component in enumerate(connected_components(view.subgraph)):
        largest = max(largest, len(component))
        if len(component) == 1:
            witness |= view.to_parent(component)
            continue
        part = induced(view.subgraph, component)
        config = post_config.with_seed(derive_seed(post_config.seed, sample_index, j))
        first = s_post.sample(part.subgraph, beta_post, config).first
        repaired = extract_stable_set(part.subgraph, first.support)
        witness |= view.to_parent(part.to_parent(repaired))
    return Recomputation(len(witness), frozenset(witness), largest)


def post_process(
    g: Graph,
    samples: SampleSet,
    beta_post: PenaltyLike,
    s_post: SamplerContract,
    post_config: Optional[SamplerConfig] = None,
    concurrent: bool = False,
    workers: Optional[int] = None,
) -> PostProcessReport:
    """Best stable set obtainable from a cost-sorted sample set.

    Parameters
    ----------
    g : Graph
        Graph the samples were drawn on
    samples : SampleSet
        Nonempty sampler output, ascending by cost
    beta_post : PenaltyLike
        Penalty for re-solving components
    s_post : SamplerContract
        Sampler used for re-solving components
    post_config : Optional[SamplerConfig]
        Configuration of ``s_post``; ``settings.POST_READS`` reads by default
    concurrent : bool
        Screen every sample against the initial incumbent and re-solve them in a process
        pool; the best value is unchanged, recalculation counts may grow
    workers : Optional[int]
        Pool size in concurrent mode

    Returns
    -------
    PostProcessReport
        Best verified stable set and the statistics of the run
    """
    if not len(samples):
        raise ValueError("post-processing needs at least one sample")
    beta_post = as_penalty(beta_post)
    post_config = post_config or SamplerConfig(reads=settings.POST_READS)

    x1 = samples.first.support
    # incumbent is the repaired X_1, never below the |X_1| - |E(G[X_1])| bound
    witness = extract_stable_set(g, x1)
    best = len(witness)
    decisions: List[SampleDecision] = []
    recalculations = largest = 0

    kept = {id(sample) for sample in samples.unique()}
    candidates: List[Tuple[int, VertexSet]] = []
    for i, sample in enumerate(samples):
        if id(sample) not in kept:
            decisions.append("skipped")
            continue
        decisions.append("recomputed")
        candidates.append((i, sample.support))

    if concurrent:
        chosen = [(i, x) for i, x in candidates if screen(g, x, best)]
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [
                executor.submit(recompute_components, g, x, beta_post, s_post, post_config, i)
                for i, x in chosen
            ]
            results = {i: f.result() for (i, _), f in zip(chosen, futures)}
        for i, _ in candidates:
            if i not in results:
                decisions[i] = "screened"
                continue
            recalculations += 1
            result = results[i]
            largest = max(largest, result.largest_component)
            if result.value > best:
                best, witness = result.value, result.witness
    else:
        for i, x in candidates:
            if not screen(g, x, best):
                decisions[i] = "screened"
                continue
            recalculations += 1
            result = recompute_components(g, x, beta_post, s_post, post_config, i)
            largest = max(largest, result.largest_component)
            if result.value > best:
                best, witness = result.value, result.witness

    if not is_stable_set(g, witness) or len(witness) != best:
        raise AssertionError("post-processing produced an invalid witness")
    logger.debug(
        f"post-processing: best={best}, recalculations={recalculations}/{len(samples)}, "
        f"largest component={largest}"
    )
    return PostProcessReport(
        alpha_hat=samples.alpha_hat,
        x1_vertices=len(x1),
        x1_edges=induced_edge_count(g, x1),
        best=best,
        witness=tuple(sorted(witness)),
        recalculations=recalculations,
        largest_component=largest,
        beta_post=beta_post,
        per_sample=decisions,
        deterministic=not concurrent,
    )
