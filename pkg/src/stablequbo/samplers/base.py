"""The sampler contract S(G, β) and the settings every sampler is driven by."""

from abc import ABC, abstractmethod
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from stablequbo.config import settings
from stablequbo.core.graph import Graph
from stablequbo.qubo import Penalty, PenaltyLike, SampleSet, as_penalty


class SamplerConfig(BaseModel):
    """Run parameters of one sampler call."""

    model_config = ConfigDict(frozen=True)

    reads: int = Field(settings.DEFAULT_READS, ge=1, description="Independent runs k")
    sweeps: int = Field(
        settings.SWEEPS, ge=1, description="Metropolis sweeps per read, n proposals each"
    )
    t_hot: float = Field(settings.T_HOT, gt=0, description="Initial temperature")
    t_cold: float = Field(settings.T_COLD, gt=0, description="Final temperature")
    seed: int = Field(0, ge=0, lt=2**64, description="64-bit master seed")

    @model_validator(mode="after")
    def _check_schedule(self) -> "SamplerConfig":
        if not self.t_hot > self.t_cold:
            raise ValueError(f"t_hot ({self.t_hot}) must exceed t_cold ({self.t_cold})")
        return self

    def with_seed(self, seed: int) -> "SamplerConfig":
        return self.model_copy(update={"seed": seed})


def derive_seed(seed: int, *keys: int) -> int:
    """Child seed of ``seed`` for the stream addressed by ``keys``, independent of call order."""
    sequence = np.random.SeedSequence(seed, spawn_key=keys)
    return int(sequence.generate_state(1, np.uint64)[0])


def read_rng(seed: int, read: int) -> np.random.Generator:
    """Generator of one read; reads never share a stream."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(read,)))


class SamplerContract(ABC):
    """S(G, β): returns ``config.reads`` samples sorted ascending by exact cost."""

    name: str = "sampler"

    def sample(
        self, g: Graph, beta: PenaltyLike, config: Optional[SamplerConfig] = None
    ) -> SampleSet:
        config = config or SamplerConfig()
        return self._sample(g, as_penalty(beta), config)

    @abstractmethod
    def _sample(self, g: Graph, beta: Penalty, config: SamplerConfig) -> SampleSet:
        """Produce the sample set; costs must come from ``make_sample``."""
