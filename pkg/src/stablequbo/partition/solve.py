"""Solving an instance one simple CH-partition at a time."""

from fractions import Fraction
from typing import List, Optional, Sequence

from loguru import logger
from tqdm import tqdm

from stablequbo.config import settings
from stablequbo.core.graph import (
    Graph,
    VertexSet,
    annihilation_bound,
    induced,
    is_stable_set,
    to_mask,
)
from stablequbo.core.models import PartitionOutcome, PartitionSolveReport
from stablequbo.partition.chpartition import (
    check_ordering,
    complement_degree_order,
    iter_simple_entries,
)
from stablequbo.postprocess import post_process
from stablequbo.qubo import PenaltyLike, as_penalty, post_penalty
from stablequbo.samplers import (
    SamplerConfig,
    SamplerContract,
    SimulatedAnnealingSampler,
    derive_seed,
)


def solve_with_partitioning(
    g: Graph,
    beta: PenaltyLike,
    beta_post: Optional[PenaltyLike] = None,
    s: Optional[SamplerContract] = None,
    s_post: Optional[SamplerContract] = None,
    config: Optional[SamplerConfig] = None,
    post_config: Optional[SamplerConfig] = None,
    ordering: Optional[Sequence[int]] = None,
    progress: bool = False,
) -> PartitionSolveReport:
    """Sample and post-process every simple CH-partition the incumbent cannot rule out.

    The partition of v_i is skipped when a(G[C_i ∪ H_i]) <= best. Since the largest
    stable set over all partitions is α(G), skipping never loses the optimum.

    Parameters
    ----------
    g : Graph
        Stable set instance
    beta : PenaltyLike
        Penalty for sampling each partition with ``s``
    beta_post : Optional[PenaltyLike]
        Penalty for post-processing; ``post_penalty(beta)`` when omitted
    s, s_post : Optional[SamplerContract]
        Front-end and re-solving samplers, simulated annealing when omitted
    config, post_config : Optional[SamplerConfig]
        Their configurations; ``post_config`` defaults to ``settings.POST_READS`` reads
    ordering : Optional[Sequence[int]]
        Vertex order, ascending degree in Ḡ by default
    progress : bool
        Show a progress bar over partitions

    Returns
    -------
    PartitionSolveReport
        Best stable set in ``g`` and per-partition outcomes
    """
    beta = as_penalty(beta)
    beta_post = post_penalty(beta) if beta_post is None else as_penalty(beta_post)
    s = s or SimulatedAnnealingSampler()
    s_post = s_post or SimulatedAnnealingSampler()
    config = config or SamplerConfig()
    post_config = post_config or SamplerConfig(reads=settings.POST_READS)
    ordering = check_ordering(g, complement_degree_order(g) if ordering is None else ordering)

    best, witness = 0, frozenset()
    alpha_hat: Optional[Fraction] = None
    solved = recalculations = largest = 0
    outcomes: List[PartitionOutcome] = []
    entries = iter_simple_entries(g, ordering)
    for index, entry in enumerate(
        tqdm(entries, total=g.n, desc="Solving partitions", disable=not progress)
    ):
        vertices: VertexSet = entry.vertices
        if annihilation_bound(g, to_mask(vertices)) <= best:
            outcomes.append(
                PartitionOutcome(index=index, core=entry.core, size=entry.size, pruned=True)
            )
            continue
        view = induced(g, vertices)
        samples = s.sample(view.subgraph, beta, config.with_seed(derive_seed(config.seed, index)))
        report = post_process(
            view.subgraph,
            samples,
            beta_post,
            s_post,
            post_config.with_seed(derive_seed(post_config.seed, index)),
        )
        solved += 1
        recalculations += report.recalculations
        largest = max(largest, report.largest_component)
        alpha_hat = report.alpha_hat if alpha_hat is None else max(alpha_hat, report.alpha_hat)
        outcomes.append(
            PartitionOutcome(
                index=index, core=entry.core, size=entry.size, pruned=False, value=report.best
            )
        )
        if report.best > best:
            best, witness = report.best, view.to_parent(report.witness)
            logger.debug(f"partition {index} (core {entry.core}) improves best to {best}")

    if not is_stable_set(g, witness) or len(witness) != best:
        raise AssertionError("partitioned solve produced an invalid witness")
    logger.info(f"partitioned solve: best={best}, {solved}/{g.n} partitions solved")
    return PartitionSolveReport(
        best=best,
        witness=tuple(sorted(witness)),
        partitions_solved=solved,
        partitions_total=g.n,
        alpha_hat=alpha_hat,
        recalculations=recalculations,
        largest_component=largest,
        beta_post=beta_post,
        per_partition=outcomes,
    )
