from fractions import Fraction

import numpy as np
import pytest

from stablequbo.core.generators import generate_random_graph
from stablequbo.core.graph import Graph, induced, induced_edge_count, is_stable_set
from stablequbo.postprocess import extract_stable_set, post_process, recompute_components, screen
from stablequbo.qubo import SampleSet, post_penalty
from stablequbo.samplers import ExactSampler, SamplerConfig, SimulatedAnnealingSampler
from tests.helpers import brute_alpha, random_graph_suite

F = Fraction


def test_extract_on_k2_keeps_lower_id(k2):
    assert extract_stable_set(k2, {0, 1}) == frozenset({0})


def test_extract_leaves_stable_sets_alone(five_vertex_graph):
    assert extract_stable_set(five_vertex_graph, {0, 2, 4}) == frozenset({0, 2, 4})
    assert extract_stable_set(five_vertex_graph, set()) == frozenset()


def test_extract_drops_the_hub_of_a_star(star_30):
    g, x = star_30
    result = extract_stable_set(g, x)
    assert len(result) == 29
    assert 0 not in result


def test_extract_guarantee_on_random_subsets():
    rng = np.random.default_rng(21)
    for i in range(300):
        g = generate_random_graph(int(rng.integers(2, 25)), float(rng.random()), seed=i)
        x = frozenset(np.flatnonzero(rng.integers(0, 2, g.n)).tolist())
        result = extract_stable_set(g, x)
        assert result <= x
        assert is_stable_set(g, result)
        assert len(result) >= len(x) - induced_edge_count(g, x)


def test_screen(five_vertex_graph):
    assert screen(five_vertex_graph, {0, 2, 4}, 2)
    assert not screen(five_vertex_graph, {0, 2, 4}, 3)
    assert not screen(five_vertex_graph, set(), 0)


def test_recompute_components_sums_over_components():
    # two triangles and an isolated vertex: alpha = 1 + 1 + 1
    g = Graph.from_edges(7, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    result = recompute_components(g, set(range(7)), 1, ExactSampler(), SamplerConfig(reads=1))
    assert result.value == 3
    assert result.largest_component == 3
    assert is_stable_set(g, result.witness)
    assert 6 in result.witness


def test_stable_samples_need_no_recalculation(five_vertex_graph):
    samples = SampleSet.from_assignments(
        five_vertex_graph,
        [[1, 0, 1, 0, 1], [1, 0, 1, 0, 0], [0, 0, 0, 0, 1], [1, 0, 1, 0, 1]],
        1,
        4,
    )
    report = post_process(five_vertex_graph, samples, 1, ExactSampler())
    assert report.best == 3
    assert report.recalculations == 0
    assert report.per_sample == ["screened", "skipped", "screened", "screened"]
    assert report.alpha_hat == 3
    assert report.alpha_hat_post == 3


def test_report_fields(k2):
    samples = SampleSet.from_assignments(k2, [[1, 1]], F(1, 4), 1)
    report = post_process(k2, samples, post_penalty(F(1, 4)), ExactSampler())
    assert report.alpha_hat == F(3, 2)
    assert report.x1_vertices == 2
    assert report.x1_edges == 1
    assert report.best == 1
    assert report.beta_post == F(1, 2)
    assert report.deterministic
    data = report.model_dump(mode="json")
    assert data["alpha_hat"] == "3/2"
    assert data["beta_post"] == "1/2"
    assert data["alpha_hat_post"] == 1


def test_empty_sample_set_is_rejected(k2):
    with pytest.raises(ValueError):
        post_process(k2, SampleSet.from_samples([], 1, 1), 1, ExactSampler())


def test_exact_post_sampler_on_full_set_recovers_alpha():
    for _, g in random_graph_suite(80, sizes=range(2, 15), ps=(0.2, 0.5, 0.8), seed=17):
        samples = SampleSet.from_assignments(g, [[1] * g.n], F(1, 4), 1)
        report = post_process(g, samples, F(1, 2), ExactSampler())
        assert report.best == brute_alpha(g)
        assert is_stable_set(g, report.witness)


def test_post_processing_never_exceeds_alpha():
    sampler = SimulatedAnnealingSampler()
    config = SamplerConfig(reads=8, sweeps=50)
    for i, g in random_graph_suite(40, sizes=range(4, 13), ps=(0.3, 0.6), seed=2):
        for beta in (F(1, 4), F(1, 2), F(1)):
            samples = sampler.sample(g, beta, config.with_seed(i))
            report = post_process(
                g, samples, post_penalty(beta), sampler, config.with_seed(i + 1000)
            )
            assert is_stable_set(g, report.witness)
            assert len(report.witness) == report.best
            assert report.best <= brute_alpha(g)
            assert len(report.per_sample) == len(samples)


def test_concurrent_mode_agrees_with_sequential():
    g = generate_random_graph(24, 0.5, seed=6)
    sampler = SimulatedAnnealingSampler()
    samples = sampler.sample(g, F(1, 4), SamplerConfig(reads=10, sweeps=20, seed=3))
    post_config = SamplerConfig(reads=5, sweeps=50, seed=4)
    sequential = post_process(g, samples, F(1, 2), sampler, post_config)
    concurrent = post_process(
        g, samples, F(1, 2), sampler, post_config, concurrent=True, workers=2
    )
    assert concurrent.best == sequential.best
    assert concurrent.witness == sequential.witness
    assert concurrent.recalculations >= sequential.recalculations
    assert not concurrent.deterministic


def test_extract_guarantee_when_edges_are_fewer_than_vertices():
    rng = np.random.default_rng(41)
    checked = 0
    while checked < 1000:
        g = generate_random_graph(int(rng.integers(2, 25)), float(rng.random()), seed=checked)
        x = frozenset(np.flatnonzero(rng.integers(0, 2, g.n)).tolist())
        edges = induced_edge_count(g, x)
        if edges >= len(x):
            continue
        checked += 1
        result = extract_stable_set(g, x)
        assert is_stable_set(g, result)
        assert len(result) >= len(x) - edges >= 1


def test_screened_subsets_hold_no_larger_stable_set():
    rng = np.random.default_rng(13)
    for _, g in random_graph_suite(300, sizes=range(1, 13), ps=(0.2, 0.5, 0.8), seed=23):
        x = frozenset(np.flatnonzero(rng.integers(0, 2, g.n)).tolist())
        alpha_x = brute_alpha(induced(g, x).subgraph)
        for best in range(6):
            if not screen(g, x, best):
                assert alpha_x <= best


def test_incumbent_starts_from_the_repaired_best_sample(star_30):
    g, x = star_30
    # |X_1| - |E(G[X_1])| = 25 would let the sample through; the repaired X_1 has 29
    assert screen(g, x, len(x) - induced_edge_count(g, x))
    samples = SampleSet.from_assignments(g, [[1] * g.n], 1, 1)
    report = post_process(g, samples, 1, ExactSampler())
    assert report.best == 29
    assert report.recalculations == 0
    assert report.per_sample == ["screened"]
