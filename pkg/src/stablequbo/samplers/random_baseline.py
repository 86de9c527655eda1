import numpy as np

from stablequbo.core.graph import Graph
from stablequbo.qubo import Penalty, SampleSet
from stablequbo.samplers.base import SamplerConfig, SamplerContract


class RandomSampler(SamplerContract):
    """Uniformly random bit vectors; the control every other sampler should beat."""

    name = "random"

    def _sample(self, g: Graph, beta: Penalty, config: SamplerConfig) -> SampleSet:
        rng = np.random.default_rng(config.seed)
        bits = rng.integers(0, 2, size=(config.reads, g.n), dtype=np.int8)
        return SampleSet.from_assignments(g, bits.tolist(), beta, config.reads)
