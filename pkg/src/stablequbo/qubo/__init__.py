from .formulation import (
    HALF,
    Penalty,
    PenaltyLike,
    QuboInstance,
    as_penalty,
    build_qubo,
    cost,
    drop_conflict_endpoint,
    exact_qubo_optimum,
    export_qubo,
    extraction_gap,
    format_fraction,
    post_penalty,
    scaled_penalty,
)
from .samples import Sample, SampleSet, make_sample, sample_from_mask
from .rescale import (
    QuadraticCoefficients,
    evaluate_coefficients,
    qubo_coefficients,
    rescale_to_unit,
)

__all__ = [
    "HALF",
    "Penalty",
    "PenaltyLike",
    "QuboInstance",
    "QuadraticCoefficients",
    "Sample",
    "SampleSet",
    "as_penalty",
    "build_qubo",
    "cost",
    "drop_conflict_endpoint",
    "evaluate_coefficients",
    "exact_qubo_optimum",
    "export_qubo",
    "extraction_gap",
    "format_fraction",
    "make_sample",
    "post_penalty",
    "qubo_coefficients",
    "rescale_to_unit",
    "sample_from_mask",
    "scaled_penalty",
]
