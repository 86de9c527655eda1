from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from stablequbo.core.errors import EnumerationLimitError, InvalidPenaltyError
from stablequbo.core.generators import extraction_gap_graph, generate_random_graph
from stablequbo.core.graph import Graph, induced_edge_count, is_stable_set
from stablequbo.qubo import (
    as_penalty,
    build_qubo,
    cost,
    drop_conflict_endpoint,
    exact_qubo_optimum,
    export_qubo,
    extraction_gap,
    post_penalty,
)
from tests.helpers import brute_alpha, random_graph_suite

F = Fraction


@pytest.mark.parametrize(
    "value, expected",
    [("1/2", F(1, 2)), (0.1, F(1, 10)), (2, F(2)), (F(3, 4), F(3, 4)), ("0.25", F(1, 4))],
)
def test_as_penalty_parses_exact_rationals(value, expected):
    assert as_penalty(value) == expected


@pytest.mark.parametrize("value", [0, "-1/2", "abc", "1/0"])
def test_as_penalty_rejects_non_positive_or_garbage(value):
    with pytest.raises(InvalidPenaltyError):
        as_penalty(value)


def test_build_qubo_k2(k2):
    q = build_qubo(k2, "1/2").to_dense()
    assert q.tolist() == [[-1, F(1, 2)], [F(1, 2), -1]]


def test_build_qubo_edgeless_is_minus_identity():
    q = build_qubo(Graph.empty(3), 7).to_dense()
    assert (q == -np.eye(3, dtype=int)).all()


def test_build_qubo_path(p3):
    q = build_qubo(p3, 1).to_dense()
    assert q.tolist() == [[-1, 1, 0], [1, -1, 1], [0, 1, -1]]


def test_build_qubo_rejects_zero_penalty(k2):
    with pytest.raises(InvalidPenaltyError):
        build_qubo(k2, 0)


def test_cost_examples(k2, star_30):
    g, x = star_30
    assert cost(g, x, 1) == -20
    assert cost(k2, {0, 1}, "1/4") == F(-3, 2)
    assert cost(k2, set(), 5) == 0


def test_evaluate_matches_cost(five_vertex_graph):
    instance = build_qubo(five_vertex_graph, "1/3")
    for x in ({1, 2, 3}, {0, 2, 4}, set(), {0, 1, 2, 3, 4}):
        assert instance.evaluate(x) == cost(five_vertex_graph, x, "1/3")


def test_export_qubo_k2(k2):
    assert export_qubo(build_qubo(k2, "1/2")) == "0 0 -1\n0 1 1/2\n1 1 -1\n"


def test_export_qubo_prints_integers_plainly(p3):
    lines = export_qubo(build_qubo(p3, 10)).splitlines()
    assert lines == ["0 0 -1", "0 1 10", "1 1 -1", "1 2 10", "2 2 -1"]


def test_post_penalty_policy():
    assert post_penalty(F(1, 10)) == F(1, 2)
    assert post_penalty(F(1, 2)) == F(1, 2)
    assert post_penalty(F(10)) == 10


def test_exact_optimum_examples(k2, c5):
    assert exact_qubo_optimum(k2, "1/4") == (frozenset({0, 1}), F(-3, 2))
    x, value = exact_qubo_optimum(k2, "1/2")
    assert value == -1
    # lexicographically smallest minimiser: (0, 1) precedes (1, 0) and (1, 1)
    assert x == frozenset({1})
    assert exact_qubo_optimum(c5, 1)[1] == -2


def test_exact_optimum_size_guard():
    with pytest.raises(EnumerationLimitError):
        exact_qubo_optimum(Graph.empty(25), 1)


@pytest.mark.slow
def test_cost_identity_over_all_vectors():
    for _, g in random_graph_suite(100, sizes=range(1, 11), ps=(0.3, 0.6), seed=11):
        vectors = np.array(list(product((0, 1), repeat=g.n)), dtype=np.int64)
        for beta in (F(1, 10), F(1, 2), F(1), F(10)):
            # q * Q is integral, so the identity is checked exactly in int64
            scaled = (build_qubo(g, beta).to_dense() * beta.denominator).astype(np.int64)
            values = ((vectors @ scaled) * vectors).sum(axis=1)
            for bits, value in zip(vectors.tolist(), values.tolist()):
                x = {i for i, b in enumerate(bits) if b}
                assert F(value, beta.denominator) == cost(g, x, beta)


@pytest.mark.slow
def test_penalty_at_least_half_recovers_alpha():
    for _, g in random_graph_suite(500, sizes=range(2, 13), ps=(0.2, 0.5, 0.8), seed=1):
        alpha = brute_alpha(g)
        for beta in (F(1, 2), F(1), F(10)):
            x, value = exact_qubo_optimum(g, beta)
            assert -value == alpha
            if beta > F(1, 2):
                assert is_stable_set(g, x)


@pytest.mark.slow
def test_small_penalty_overestimates_alpha():
    for _, g in random_graph_suite(500, sizes=range(2, 13), ps=(0.2, 0.5, 0.8), seed=1):
        alpha = brute_alpha(g)
        for beta in (F(1, 10), F(1, 4)):
            assert -exact_qubo_optimum(g, beta)[1] >= alpha


def test_k2_small_penalty_exceeds_alpha(k2):
    for beta in (F(1, 10), F(1, 4)):
        alpha_beta = -exact_qubo_optimum(k2, beta)[1]
        assert alpha_beta == 2 - 2 * beta
        assert alpha_beta > 1


def test_dropping_a_conflict_endpoint_never_increases_cost():
    rng = np.random.default_rng(4)
    for i in range(200):
        g = generate_random_graph(10, 0.5, seed=i)
        x = frozenset(np.flatnonzero(rng.integers(0, 2, g.n)).tolist())
        if induced_edge_count(g, x) == 0:
            continue
        smaller = drop_conflict_endpoint(g, x)
        assert len(smaller) == len(x) - 1
        for beta in (F(1, 2), F(1), F(10)):
            assert cost(g, smaller, beta) <= cost(g, x, beta)


def test_drop_conflict_endpoint_is_identity_on_stable_sets(five_vertex_graph):
    assert drop_conflict_endpoint(five_vertex_graph, {0, 2, 4}) == frozenset({0, 2, 4})


@pytest.mark.parametrize("epsilon", [F(1, 10), F(1, 100)])
def test_gap_construction(epsilon):
    g = extraction_gap_graph(epsilon)
    x = frozenset(range(g.n))
    assert 2 * epsilon * induced_edge_count(g, x) > 1
    assert extraction_gap(g, x, F(1, 2) + epsilon) > 1
