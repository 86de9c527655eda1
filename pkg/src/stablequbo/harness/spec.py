from fractions import Fraction
from pathlib import Path
from typing import List, Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from stablequbo.config import settings
from stablequbo.core.models import Rational
from stablequbo.qubo import PenaltyLike, as_penalty
from stablequbo.samplers import SamplerConfig, make_sampler


def default_betas() -> List[Fraction]:
    return [as_penalty(b) for b in settings.DEFAULT_BETAS.split(",") if b.strip()]


class ExperimentSpec(BaseModel):
    """A penalty sweep over a set of instances, as read from a JSON file."""

    model_config = ConfigDict(arbitrary_types_allowed=True, extra="forbid")

    instances: List[str] = Field(
        ..., min_length=1, description="DIMACS paths, cached instance names or paley:<q>"
    )
    complement: bool = Field(True, description="Complement DIMACS clique graphs")
    betas: List[Rational] = Field(
        default_factory=default_betas, min_length=1, description="Penalty grid"
    )
    sampler: str = Field("sa", description="Front-end sampler S")
    post_sampler: str = Field("sa", description="Re-solving sampler S_post")
    reads: int = Field(settings.DEFAULT_READS, ge=1, description="Reads of S")
    post_reads: int = Field(settings.POST_READS, ge=1, description="Reads of S_post")
    sweeps: int = Field(settings.SWEEPS, ge=1, description="Annealing sweeps per read")
    t_hot: float = Field(settings.T_HOT, gt=0)
    t_cold: float = Field(settings.T_COLD, gt=0)
    mode: Literal["direct", "partitioned"] = Field("direct", description="Solve mode")
    seed: int = Field(0, ge=0, lt=2**64, description="Master seed")
    workers: int = Field(1, ge=1, description="Parallel instance x beta cells")

    @field_validator("betas")
    @classmethod
    def _positive(cls, betas: List[PenaltyLike]) -> List[Fraction]:
        return [as_penalty(b) for b in betas]

    @field_validator("sampler", "post_sampler")
    @classmethod
    def _known_sampler(cls, choice: str) -> str:
        make_sampler(choice)
        return choice

    @model_validator(mode="after")
    def _check_schedule(self) -> "ExperimentSpec":
        if not self.t_hot > self.t_cold:
            raise ValueError(f"t_hot ({self.t_hot}) must exceed t_cold ({self.t_cold})")
        return self

    def sampler_config(self, seed: int) -> SamplerConfig:
        return SamplerConfig(
            reads=self.reads, sweeps=self.sweeps, t_hot=self.t_hot, t_cold=self.t_cold, seed=seed
        )

    def post_config(self, seed: int) -> SamplerConfig:
        return self.sampler_config(seed).model_copy(update={"reads": self.post_reads})

    @classmethod
    def from_file(cls, path: Path) -> "ExperimentSpec":
        return cls.model_validate_json(Path(path).read_text())
