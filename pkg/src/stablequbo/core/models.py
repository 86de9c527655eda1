from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction
from typing import Annotated, List, Literal, Optional, Tuple

from pydantic import (
    BaseModel,
    BeforeValidator,
    ConfigDict,
    Field,
    PlainSerializer,
    computed_field,
)


def _to_fraction(value: object) -> object:
    if isinstance(value, float):
        return Fraction(str(value))
    if isinstance(value, (int, str)):
        return Fraction(value)
    return value


def _round_half_up(value: object) -> object:
    if isinstance(value, (int, float, str, Decimal)):
        return Decimal(str(value)).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP)
    return value


Rational = Annotated[
    Fraction,
    BeforeValidator(_to_fraction),
    PlainSerializer(lambda f: str(f), return_type=str),
]
"""Exact rational, written as ``p/q`` (or ``p``) in every report format."""

Density = Annotated[
    Decimal,
    BeforeValidator(_round_half_up),
    PlainSerializer(lambda d: f"{d:.2f}", return_type=str),
]
"""Edge density with two decimals, rounded half up."""

SampleDecision = Literal["screened", "recomputed", "skipped"]


class PostProcessReport(BaseModel):
    """Outcome of post-processing one sample set."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    alpha_hat: Rational = Field(..., description="-cost(X_1, beta) of the best raw sample")
    x1_vertices: int = Field(..., description="|X_1|")
    x1_edges: int = Field(..., description="|E(G[X_1])|")
    best: int = Field(..., description="Size of the best stable set found")
    witness: Tuple[int, ...] = Field(..., description="Sorted stable set of size best")
    recalculations: int = Field(
        0,
        description=(
            "Samples whose components were re-solved; screening starts from the repaired X_1, "
            "so this can be lower than with the |X_1| - |E(G[X_1])| starting bound"
        ),
    )
    largest_component: int = Field(0, description="Largest re-solved component")
    beta_post: Rational = Field(..., description="Penalty used for re-solving")
    per_sample: List[SampleDecision] = Field(
        default_factory=list, description="Decision per sample, in sample order"
    )
    deterministic: bool = Field(True, description="False when produced in concurrent mode")

    @computed_field
    @property
    def alpha_hat_post(self) -> int:
        return self.best


class PartitionOutcome(BaseModel):
    index: int = Field(..., description="Position i of the core vertex in the ordering")
    core: int = Field(..., description="Core vertex v_i")
    size: int = Field(..., description="|C_i| + |H_i|")
    pruned: bool = Field(..., description="Skipped by the annihilation screen")
    value: Optional[int] = Field(None, description="Best stable set found inside, if solved")


class PartitionSolveReport(BaseModel):
    """Outcome of solving an instance partition by partition."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    best: int = Field(..., description="Size of the best stable set over all partitions")
    witness: Tuple[int, ...] = Field(..., description="Sorted stable set in the input graph")
    partitions_solved: int = Field(0, description="Partitions that were sampled")
    partitions_total: int = Field(..., description="Number of partitions, n")
    alpha_hat: Optional[Rational] = Field(
        None, description="Best raw -cost over all solved partitions"
    )
    recalculations: int = Field(0, description="Recalculations summed over partitions")
    largest_component: int = Field(0, description="Largest re-solved component")
    beta_post: Rational = Field(..., description="Penalty used for re-solving")
    per_partition: List[PartitionOutcome] = Field(default_factory=list)

    @computed_field
    @property
    def alpha_hat_post(self) -> int:
        return self.best


class ResultRow(BaseModel):
    """One instance x penalty cell of an experiment."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    instance: str = Field(..., description="Instance name")
    complemented: bool = Field(..., description="Whether the file graph was complemented")
    n: int = Field(0, description="Vertices of the stable set instance")
    m: int = Field(0, description="Edges of the stable set instance")
    density: Density = Field(Decimal("0.00"), description="m / C(n, 2)")
    alpha_known: Optional[int] = Field(None, description="Published alpha(G), if any")
    beta: Rational = Field(..., description="Penalty of the sampling run")
    mode: Literal["direct", "partitioned"] = Field("direct", description="Solve mode")
    sampler: str = Field("sa", description="Sampler used for S")
    alpha_hat: Optional[Rational] = Field(None, description="-cost(X_1, beta)")
    x1_vertices: Optional[int] = Field(None, description="|X_1|")
    x1_edges: Optional[int] = Field(None, description="|E(G[X_1])|")
    alpha_hat_post: Optional[int] = Field(None, description="Verified stable set size")
    recalculations: Optional[int] = Field(None, description="Re-solved samples")
    largest_component: Optional[int] = Field(None, description="Largest re-solved component")
    partitions_solved: Optional[int] = Field(None, description="Partitioned mode only")
    error: Optional[str] = Field(None, description="Failure message for this cell")

    @property
    def failed(self) -> bool:
        return self.error is not None


class PartitionCostRow(BaseModel):
    """Cost of the regular and the simple CH-partition of one instance."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    instance: str
    n: int
    m: int
    d: Density
    regular: int = Field(..., title="cost(P)", description="Regular partition cost")
    simple: int = Field(..., title="cost(P_S)", description="Simple partition cost")
    diff: int = Field(..., description="regular - simple")
    reduction: int = Field(..., description="100 * diff / regular, rounded half up")
