"""Sampler output: binary assignments with exact costs, kept sorted by cost."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, List, Sequence, Tuple

from stablequbo.core.errors import VertexOutOfRangeError
from stablequbo.core.graph import Graph, VertexSet
from stablequbo.qubo.formulation import Penalty, cost


@dataclass(frozen=True, slots=True)
class Sample:
    """One read: the 0/1 assignment and cost(X, β) recomputed from it."""

    assignment: Tuple[int, ...]
    cost: Fraction

    @property
    def support(self) -> VertexSet:
        """The vertex set X whose indicator vector is ``assignment``."""
        return frozenset(i for i, bit in enumerate(self.assignment) if bit)

    @property
    def bits(self) -> str:
        return "".join(map(str, self.assignment))


def make_sample(g: Graph, assignment: Sequence[int], beta: Penalty) -> Sample:
    """Build a Sample whose cost is computed here, never taken from the producer."""
    if len(assignment) != g.n:
        raise VertexOutOfRangeError(
            f"assignment has length {len(assignment)}, graph has {g.n} vertices"
        )
    bits = tuple(1 if b else 0 for b in assignment)
    support = frozenset(i for i, b in enumerate(bits) if b)
    return Sample(bits, cost(g, support, beta))


def sample_from_mask(g: Graph, mask: int, beta: Penalty) -> Sample:
    return make_sample(g, [mask >> i & 1 for i in range(g.n)], beta)


@dataclass(frozen=True)
class SampleSet:
    """The solver output [X_1, ..., X_k], ascending by cost.

    Parameters
    ----------
    samples : Tuple[Sample, ...]
        Samples, sorted on construction by (cost, assignment)
    beta : Penalty
        Penalty the costs were computed at
    reads : int
        Number of reads requested from the sampler
    """

    samples: Tuple[Sample, ...]
    beta: Penalty
    reads: int

    @classmethod
    def from_samples(cls, samples: Iterable[Sample], beta: Penalty, reads: int) -> "SampleSet":
        ordered = sorted(samples, key=lambda s: (s.cost, s.assignment))
        return cls(tuple(ordered), beta, reads)

    @classmethod
    def from_assignments(
        cls, g: Graph, assignments: Iterable[Sequence[int]], beta: Penalty, reads: int
    ) -> "SampleSet":
        return cls.from_samples((make_sample(g, a, beta) for a in assignments), beta, reads)

    def __len__(self) -> int:
        return len(self.samples)

    def __iter__(self) -> Iterator[Sample]:
        return iter(self.samples)

    def __getitem__(self, index: int) -> Sample:
        return self.samples[index]

    @property
    def first(self) -> Sample:
        """X_1, the lowest-cost sample."""
        return self.samples[0]

    @property
    def alpha_hat(self) -> Fraction:
        """-cost(X_1, β), the raw sampler estimate of the stability number."""
        return -self.first.cost

    def unique(self) -> List[Sample]:
        """Samples with duplicate assignments removed, order kept."""
        seen = set()
        out = []
        for s in self.samples:
            if s.assignment not in seen:
                seen.add(s.assignment)
                out.append(s)
        return out
