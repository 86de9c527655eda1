"""Coefficient rescaling into the unit operating range of analog annealers.

Shrinking all coefficients by the largest magnitude keeps the order of assignment costs
but also shrinks the gaps between them, which is why the penalty is best kept close to the
vertex reward (β near 1/2 for this formulation).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Mapping, Sequence, Tuple, Union

from stablequbo.core.errors import RescaleError
from stablequbo.qubo.formulation import QuboInstance

Number = Union[Fraction, int, float, str]


def as_exact(value: Number) -> Fraction:
    """Exact rational; floats are read through their decimal repr."""
    return Fraction(str(value)) if isinstance(value, float) else Fraction(value)


@dataclass(frozen=True)
class QuadraticCoefficients:
    """Upper-triangular QUBO coefficients: sum_i l_i x_i + sum_{i<j} q_ij x_i x_j."""

    linear: Dict[int, Fraction] = field(default_factory=dict)
    quadratic: Dict[Tuple[int, int], Fraction] = field(default_factory=dict)

    @classmethod
    def build(
        cls,
        linear: Sequence[Number] = (),
        quadratic: Mapping[Tuple[int, int], Number] = {},
    ) -> "QuadraticCoefficients":
        return cls(
            {i: as_exact(c) for i, c in enumerate(linear)},
            {(min(i, j), max(i, j)): as_exact(c) for (i, j), c in quadratic.items()},
        )

    @property
    def variables(self) -> int:
        indices = set(self.linear)
        for i, j in self.quadratic:
            indices.update((i, j))
        return max(indices) + 1 if indices else 0

    def values(self) -> Sequence[Fraction]:
        return [*self.linear.values(), *self.quadratic.values()]

    def scaled(self, factor: Fraction) -> "QuadraticCoefficients":
        return QuadraticCoefficients(
            {i: c * factor for i, c in self.linear.items()},
            {ij: c * factor for ij, c in self.quadratic.items()},
        )


def evaluate_coefficients(coeffs: QuadraticCoefficients, assignment: Sequence[int]) -> Fraction:
    """Exact energy of a 0/1 assignment."""
    total = sum((c for i, c in coeffs.linear.items() if assignment[i]), Fraction(0))
    total += sum(
        (c for (i, j), c in coeffs.quadratic.items() if assignment[i] and assignment[j]),
        Fraction(0),
    )
    return total


def rescale_to_unit(coeffs: QuadraticCoefficients) -> Tuple[QuadraticCoefficients, Fraction]:
    """Scale coefficients into [-1, 1] by 1/s, s the largest absolute coefficient.

    Parameters
    ----------
    coeffs : QuadraticCoefficients
        Coefficients with at least one nonzero entry

    Returns
    -------
    Tuple[QuadraticCoefficients, Fraction]
        Scaled coefficients and the factor applied; factor 1 when s <= 1
    """
    scale = max((abs(c) for c in coeffs.values()), default=Fraction(0))
    if scale == 0:
        raise RescaleError("cannot rescale an all-zero coefficient set")
    if scale <= 1:
        return coeffs, Fraction(1)
    factor = 1 / scale
    return coeffs.scaled(factor), factor


def qubo_coefficients(instance: QuboInstance) -> QuadraticCoefficients:
    """x^T Q x as upper-triangular coefficients: -1 per vertex, 2β per edge."""
    edge_weight = 2 * instance.beta
    return QuadraticCoefficients(
        {i: Fraction(-1) for i in range(instance.n)},
        {(u, v): edge_weight for u, v in instance.source.edges()},
    )
