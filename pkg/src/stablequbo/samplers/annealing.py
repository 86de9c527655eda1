"""Single-flip Metropolis simulated annealing on the stable set QUBO."""

import math
from typing import List, Sequence, Tuple

import numpy as np
from loguru import logger

from stablequbo.core.graph import Graph
from stablequbo.qubo import Penalty, SampleSet, sample_from_mask, scaled_penalty
from stablequbo.samplers.base import SamplerConfig, SamplerContract, read_rng


def temperature_schedule(config: SamplerConfig) -> List[float]:
    """Geometric schedule from ``t_hot`` to ``t_cold``, one temperature per sweep."""
    if config.sweeps == 1:
        return [config.t_cold]
    return np.geomspace(config.t_hot, config.t_cold, config.sweeps).tolist()


def anneal_read(
    adjacency: Sequence[Tuple[int, ...]],
    q: int,
    two_p: int,
    temperatures: Sequence[float],
    rng: np.random.Generator,
) -> int:
    """One read from the all-zeros state; returns the bitmask of the best state visited.

    Energies are kept as ``q * cost`` so bookkeeping is integral; only the acceptance
    probability exp(-Δcost / T) is evaluated in floating point.
    """
    n = len(adjacency)
    state = [0] * n
    inside = [0] * n  # chosen neighbours of every vertex
    energy = best_energy = 0
    mask = best_mask = 0
    for t in temperatures:
        scale = q * t
        uniforms = rng.random(n).tolist()
        for v in range(n):
            delta = two_p * inside[v] - q
            if state[v]:
                delta = -delta
            if delta > 0 and uniforms[v] >= math.exp(-delta / scale):
                continue
            step = -1 if state[v] else 1
            state[v] ^= 1
            for u in adjacency[v]:
                inside[u] += step
            energy += delta
            mask ^= 1 << v
            if energy < best_energy:
                best_energy, best_mask = energy, mask
    return best_mask


class SimulatedAnnealingSampler(SamplerContract):
    """Classical stand-in for the annealer.

    Every read has its own generator derived from ``(config.seed, read index)``, so the
    sample set does not depend on the order reads are executed in.
    """

    name = "sa"

    def _sample(self, g: Graph, beta: Penalty, config: SamplerConfig) -> SampleSet:
        q, two_p = scaled_penalty(beta)
        temperatures = temperature_schedule(config)
        logger.debug(
            f"SA on n={g.n}, m={g.m}, beta={beta}: {config.reads} reads x {config.sweeps} sweeps"
        )
        masks = [
            anneal_read(g.adjacency, q, two_p, temperatures, read_rng(config.seed, read))
            for read in range(config.reads)
        ]
        return SampleSet.from_samples(
            (sample_from_mask(g, mask, beta) for mask in masks), beta, config.reads
        )
