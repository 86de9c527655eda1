import json

import pytest
from click.testing import CliRunner

from stablequbo.config import settings
from stablequbo.core.dimacs import read_dimacs, write_dimacs
from stablequbo.core.generators import generate_random_graph, paley_graph
from stablequbo.core.graph import Graph, complement
from stablequbo.scripts.cli import EXIT_INVALID, EXIT_OK, EXIT_PARTIAL, main


@pytest.fixture
def runner(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return CliRunner()


def test_gen_random(runner, tmp_path):
    result = runner.invoke(main, ["gen", "random", "10", "0.3", "--seed", "1", "-o", "g.clq"])
    assert result.exit_code == EXIT_OK
    assert read_dimacs(tmp_path / "g.clq") == generate_random_graph(10, 0.3, 1)


def test_gen_paley(runner, tmp_path):
    assert runner.invoke(main, ["gen", "paley", "13", "-o", "p.clq"]).exit_code == EXIT_OK
    assert read_dimacs(tmp_path / "p.clq") == paley_graph(13)
    assert runner.invoke(main, ["gen", "paley", "7", "-o", "p7.clq"]).exit_code == 2


def test_export_qubo(runner, tmp_path):
    write_dimacs(tmp_path / "k2.clq", Graph.from_edges(2, [(0, 1)]))
    args = ["export-qubo", "k2.clq", "--no-complement", "--beta", "1/2", "-o", "q.txt"]
    assert runner.invoke(main, args).exit_code == EXIT_OK
    assert (tmp_path / "q.txt").read_text() == "0 0 -1\n0 1 1/2\n1 1 -1\n"


@pytest.mark.parametrize("beta", ["0", "-1", "half"])
def test_invalid_beta_is_a_usage_error(runner, beta):
    assert runner.invoke(main, ["export-qubo", "paley:13", "--beta", beta]).exit_code == 2


def test_missing_instance(runner):
    assert runner.invoke(main, ["export-qubo", "nowhere.clq"]).exit_code == EXIT_PARTIAL


def test_solve_writes_report(runner, tmp_path):
    args = [
        "solve", "paley:13", "--sampler", "exact", "--post-sampler", "exact",
        "--reads", "3", "--post-reads", "1", "-o", "report.json",
    ]
    assert runner.invoke(main, args).exit_code == EXIT_OK
    report = json.loads((tmp_path / "report.json").read_text())
    assert report["best"] == 3
    assert report["alpha_hat_post"] == 3
    assert report["beta_post"] == "1/2"
    assert len(report["per_sample"]) == 3


def test_unknown_sampler_is_a_usage_error(runner):
    assert runner.invoke(main, ["solve", "paley:13", "--sampler", "dwave"]).exit_code == 2


def test_partition_solve(runner, tmp_path):
    args = [
        "partition-solve", "paley:13", "--sampler", "exact", "--post-sampler", "exact",
        "--reads", "1", "--post-reads", "1", "-o", "report.json",
    ]
    assert runner.invoke(main, args).exit_code == EXIT_OK
    report = json.loads((tmp_path / "report.json").read_text())
    assert report["best"] == 3
    assert report["partitions_total"] == 13


def test_partition_cost(runner, tmp_path, five_vertex_graph):
    write_dimacs(tmp_path / "five.clq", complement(five_vertex_graph))
    args = ["partition-cost", "five.clq", "--format", "csv", "-o", "costs.csv"]
    assert runner.invoke(main, args).exit_code == EXIT_OK
    lines = (tmp_path / "costs.csv").read_text().splitlines()
    assert lines == ["instance,n,m,d,regular,simple,diff,reduction", "five,5,5,0.50,4,3,1,25"]
    partial = runner.invoke(main, ["partition-cost", "five.clq", "gone.clq", "-o", "c.csv"])
    assert partial.exit_code == EXIT_PARTIAL


def write_spec(path, **fields):
    spec = dict(instances=["paley:13"], betas=["1/2"], sampler="exact", post_sampler="exact",
                reads=2, post_reads=1)
    spec.update(fields)
    path.write_text(json.dumps(spec))
    return str(path)


def test_sweep(runner, tmp_path):
    spec = write_spec(tmp_path / "spec.json", betas=["1/2", "1"])
    result = runner.invoke(main, ["sweep", spec, "--format", "json", "-o", "rows.json"])
    assert result.exit_code == EXIT_OK
    rows = json.loads((tmp_path / "rows.json").read_text())
    assert [row["beta"] for row in rows] == ["1/2", "1"]
    assert {row["alpha_hat_post"] for row in rows} == {3}


def test_sweep_exit_codes(runner, tmp_path):
    invalid = write_spec(tmp_path / "invalid.json", betas=[])
    assert runner.invoke(main, ["sweep", invalid]).exit_code == EXIT_INVALID
    partial = write_spec(tmp_path / "partial.json", instances=["paley:13", "gone.clq"])
    result = runner.invoke(main, ["sweep", partial, "-o", "rows.csv"])
    assert result.exit_code == EXIT_PARTIAL
    assert len((tmp_path / "rows.csv").read_text().splitlines()) == 3


def test_fetch_offline(runner, tmp_path, monkeypatch):
    monkeypatch.setattr(settings, "CACHE_DIR", tmp_path / "cache")
    manifest = tmp_path / "manifest.json"
    manifest.write_text(json.dumps({"instances": [{"name": "x", "url": "http://mirror.test/x"}]}))
    result = runner.invoke(main, ["fetch", "--manifest", str(manifest), "--offline"])
    assert result.exit_code == EXIT_PARTIAL
