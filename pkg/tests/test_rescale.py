from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from stablequbo.core.errors import RescaleError
from stablequbo.core.generators import generate_random_graph
from stablequbo.qubo import (
    QuadraticCoefficients,
    build_qubo,
    cost,
    evaluate_coefficients,
    qubo_coefficients,
    rescale_to_unit,
)

F = Fraction


def test_rescale_divides_by_largest_magnitude():
    coeffs = QuadraticCoefficients.build([0.1, 0.2], {(0, 1): 5})
    scaled, factor = rescale_to_unit(coeffs)
    assert factor == F(1, 5)
    assert scaled.linear == {0: F(1, 50), 1: F(1, 25)}
    assert scaled.quadratic == {(0, 1): F(1)}
    assert evaluate_coefficients(scaled, (1, 1)) == F("1.06")


def test_rescale_leaves_unit_range_untouched():
    coeffs = QuadraticCoefficients.build([-1, "1/2"], {(1, 0): "-0.75"})
    scaled, factor = rescale_to_unit(coeffs)
    assert factor == 1
    assert scaled == coeffs
    assert scaled.quadratic == {(0, 1): F(-3, 4)}


def test_rescale_rejects_all_zero():
    with pytest.raises(RescaleError):
        rescale_to_unit(QuadraticCoefficients.build([0, 0], {(0, 1): 0}))
    with pytest.raises(RescaleError):
        rescale_to_unit(QuadraticCoefficients())


def test_variables_counts_quadratic_only_indices():
    assert QuadraticCoefficients.build([], {(2, 4): 1}).variables == 5
    assert QuadraticCoefficients().variables == 0


def test_qubo_coefficients_agree_with_cost():
    g = generate_random_graph(8, 0.4, seed=2)
    instance = build_qubo(g, "3/4")
    coeffs = qubo_coefficients(instance)
    for bits in product((0, 1), repeat=g.n):
        x = {i for i, b in enumerate(bits) if b}
        assert evaluate_coefficients(coeffs, bits) == cost(g, x, "3/4")


def test_rescaling_preserves_minimisers():
    rng = np.random.default_rng(7)
    for _ in range(100):
        n = int(rng.integers(2, 11))
        linear = [F(int(c), 4) for c in rng.integers(-20, 21, n)]
        quadratic = {
            (i, j): F(int(rng.integers(-40, 41)), 8)
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < 0.3
        }
        coeffs = QuadraticCoefficients.build(linear, quadratic)
        if not any(coeffs.values()):
            continue
        scaled, factor = rescale_to_unit(coeffs)
        assert all(abs(c) <= 1 for c in scaled.values())
        vectors = list(product((0, 1), repeat=n))
        before = [evaluate_coefficients(coeffs, x) for x in vectors]
        after = [evaluate_coefficients(scaled, x) for x in vectors]
        assert after == [factor * e for e in before]
        best_before = {x for x, e in zip(vectors, before) if e == min(before)}
        best_after = {x for x, e in zip(vectors, after) if e == min(after)}
        assert best_before == best_after
