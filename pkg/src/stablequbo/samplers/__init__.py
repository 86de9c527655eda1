from .base import SamplerConfig, SamplerContract, derive_seed, read_rng
from .annealing import SimulatedAnnealingSampler, anneal_read, temperature_schedule
from .random_baseline import RandomSampler
from .exact import ExactResult, ExactSampler, clique_cover_bound, exact_alpha
from .external import ExternalSampler, parse_assignments

SAMPLER_CHOICES = ("sa", "random", "exact", "external:<cmd>")


def make_sampler(choice: str) -> SamplerContract:
    """Sampler for a ``--sampler`` value: ``sa``, ``random``, ``exact`` or ``external:<cmd>``."""
    if choice == "sa":
        return SimulatedAnnealingSampler()
    if choice == "random":
        return RandomSampler()
    if choice == "exact":
        return ExactSampler()
    if choice.startswith("external:"):
        return ExternalSampler(choice.removeprefix("external:"))
    raise ValueError(f"unknown sampler {choice!r}, expected one of {', '.join(SAMPLER_CHOICES)}")


__all__ = [
    "ExactResult",
    "ExactSampler",
    "ExternalSampler",
    "RandomSampler",
    "SAMPLER_CHOICES",
    "SamplerConfig",
    "SamplerContract",
    "SimulatedAnnealingSampler",
    "anneal_read",
    "clique_cover_bound",
    "derive_seed",
    "exact_alpha",
    "make_sampler",
    "parse_assignments",
    "read_rng",
    "temperature_schedule",
]
