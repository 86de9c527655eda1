import sys
from pathlib import Path
from typing import Any, Callable, List, Optional

import click
from loguru import logger
from pydantic import ValidationError

from stablequbo.api_clients import fetch_instances
from stablequbo.config import settings
from stablequbo.core.dimacs import write_dimacs
from stablequbo.core.errors import InvalidPenaltyError, StableQuboError
from stablequbo.core.generators import generate_random_graph, paley_graph
from stablequbo.harness import (
    FORMATS,
    ExperimentSpec,
    LoadedInstance,
    emit_report,
    load_instance,
    run_experiment,
)
from stablequbo.partition import partition_cost_row, solve_with_partitioning
from stablequbo.postprocess import post_process
from stablequbo.qubo import Penalty, as_penalty, build_qubo, export_qubo, post_penalty
from stablequbo.samplers import SamplerConfig, derive_seed, make_sampler

EXIT_OK, EXIT_PARTIAL, EXIT_INVALID = 0, 1, 2


def setup_logging(verbose: bool) -> None:
    """Configure loguru sinks: a rotating log file and stderr."""
    log_level = "DEBUG" if verbose else "INFO"
    logger.remove()
    logger.add(
        settings.LOG_FILE,
        rotation="1 week",
        level=log_level,
        format="{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {message}",
    )
    logger.add(lambda msg: click.echo(msg, err=True, nl=False), level=log_level)


def validate_beta(
    ctx: click.Context, param: click.Parameter, value: Optional[str]
) -> Optional[Penalty]:
    """Parse a positive rational penalty such as ``1/2``, ``0.25`` or ``10``."""
    if value is None:
        return None
    try:
        return as_penalty(value)
    except InvalidPenaltyError as e:
        raise click.BadParameter(str(e))


def validate_sampler(ctx: click.Context, param: click.Parameter, value: str) -> str:
    """Check a ``--sampler`` value: sa, random, exact or external:<cmd>."""
    try:
        make_sampler(value)
    except ValueError as e:
        raise click.BadParameter(str(e))
    return value


def sampler_options(func: Callable[..., Any]) -> Callable[..., Any]:
    """Options shared by every command that samples."""
    options = [
        click.option("--beta", "-b", default="1/2", callback=validate_beta),
        click.option("--sampler", default="sa", callback=validate_sampler, help="S"),
        click.option(
            "--post-sampler", default="sa", callback=validate_sampler, help="S_post"
        ),
        click.option(
            "--reads",
            type=click.IntRange(min=1),
            default=settings.DEFAULT_READS,
            help="Reads of S",
        ),
        click.option(
            "--post-reads",
            type=click.IntRange(min=1),
            default=settings.POST_READS,
            help="Reads of S_post",
        ),
        click.option("--sweeps", type=click.IntRange(min=1), default=settings.SWEEPS),
        click.option("--seed", type=click.IntRange(0, 2**64 - 1), default=0),
        click.option(
            "--complement/--no-complement",
            default=True,
            help="Complement DIMACS clique graphs (ignored for paley:<q>)",
        ),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _write(payload: bytes, output: Optional[Path]) -> None:
    if output is None:
        click.echo(payload.decode(), nl=False)
    else:
        output.write_bytes(payload)
        logger.info(f"wrote {output}")


def _load(identifier: str, complement: bool) -> LoadedInstance:
    try:
        return load_instance(identifier, complement)
    except (StableQuboError, OSError) as e:
        logger.error(f"could not load {identifier!r}: {e}")
        sys.exit(EXIT_PARTIAL)


@click.group()
@click.option("--verbose", "-v", is_flag=True, help="Enable verbose logging")
def main(verbose: bool) -> None:
    """Maximum stable sets through a penalty QUBO, with post-processing and
    core-halo partitioning.

    Instances are DIMACS files (complemented by default, since the benchmark files are
    clique instances), names of cached instances, or paley:<q> for Paley graphs.
    """
    setup_logging(verbose)


@main.command()
@click.argument("instance")
@sampler_options
@click.option("--output", "-o", type=click.Path(path_type=Path), help="Write JSON here")
def solve(
    instance: str,
    beta: Penalty,
    sampler: str,
    post_sampler: str,
    reads: int,
    post_reads: int,
    sweeps: int,
    seed: int,
    complement: bool,
    output: Optional[Path],
) -> None:
    """Sample INSTANCE at one penalty and post-process the samples."""
    loaded = _load(instance, complement)
    config = SamplerConfig(reads=reads, sweeps=sweeps, seed=seed)
    post_config = config.model_copy(
        update={"reads": post_reads, "seed": derive_seed(seed, 1)}
    )
    try:
        samples = make_sampler(sampler).sample(loaded.graph, beta, config)
        report = post_process(
            loaded.graph,
            samples,
            post_penalty(beta),
            make_sampler(post_sampler),
            post_config,
        )
    except StableQuboError as e:
        logger.error(f"{loaded.name}: {e}")
        sys.exit(EXIT_PARTIAL)
    logger.info(
        f"{loaded.name}: alpha_hat={report.alpha_hat}, alpha_hat_post={report.best}, "
        f"recalculations={report.recalculations}"
    )
    _write((report.model_dump_json(indent=2) + "\n").encode(), output)


@main.command()
@click.argument(
    "spec_file", type=click.Path(exists=True, dir_okay=False, path_type=Path)
)
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="csv")
@click.option("--output", "-o", type=click.Path(path_type=Path), help="Report file")
@click.option("--progress/--no-progress", default=False, help="Show a progress bar")
def sweep(spec_file: Path, fmt: str, output: Optional[Path], progress: bool) -> None:
    """Run the penalty sweep described by the JSON ExperimentSpec SPEC_FILE."""
    try:
        spec = ExperimentSpec.from_file(spec_file)
    except ValidationError as e:
        logger.error(f"invalid experiment spec {spec_file}:\n{e}")
        sys.exit(EXIT_INVALID)
    rows = run_experiment(spec, base_dir=spec_file.parent, progress=progress)
    _write(emit_report(rows, fmt), output)
    failed = sum(row.failed for row in rows)
    if failed:
        logger.warning(f"{failed} of {len(rows)} cells failed")
        sys.exit(EXIT_PARTIAL)


@main.command("partition-cost")
@click.argument("instances", nargs=-1, required=True)
@click.option("--complement/--no-complement", default=True)
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="csv")
@click.option("--output", "-o", type=click.Path(path_type=Path))
def partition_cost(
    instances: List[str], complement: bool, fmt: str, output: Optional[Path]
) -> None:
    """Regular against simple CH-partition cost for every instance in INSTANCES."""
    rows, failed = [], 0
    for identifier in instances:
        try:
            loaded = load_instance(identifier, complement)
        except (StableQuboError, OSError) as e:
            logger.error(f"could not load {identifier!r}: {e}")
            failed += 1
            continue
        rows.append(partition_cost_row(loaded.name, loaded.graph))
    if rows:
        _write(emit_report(rows, fmt), output)
    if failed:
        sys.exit(EXIT_PARTIAL)


@main.command("partition-solve")
@click.argument("instance")
@sampler_options
@click.option("--progress/--no-progress", default=False)
@click.option("--output", "-o", type=click.Path(path_type=Path), help="Write JSON here")
def partition_solve(
    instance: str,
    beta: Penalty,
    sampler: str,
    post_sampler: str,
    reads: int,
    post_reads: int,
    sweeps: int,
    seed: int,
    complement: bool,
    progress: bool,
    output: Optional[Path],
) -> None:
    """Solve INSTANCE one simple CH-partition at a time."""
    loaded = _load(instance, complement)
    config = SamplerConfig(reads=reads, sweeps=sweeps, seed=seed)
    post_config = config.model_copy(
        update={"reads": post_reads, "seed": derive_seed(seed, 1)}
    )
    try:
        report = solve_with_partitioning(
            loaded.graph,
            beta,
            post_penalty(beta),
            make_sampler(sampler),
            make_sampler(post_sampler),
            config,
            post_config,
            progress=progress,
        )
    except StableQuboError as e:
        logger.error(f"{loaded.name}: {e}")
        sys.exit(EXIT_PARTIAL)
    _write((report.model_dump_json(indent=2) + "\n").encode(), output)


@main.command()
@click.option(
    "--manifest",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    default=None,
    help="Manifest JSON (default: the shipped DIMACS manifest)",
)
@click.option("--offline", is_flag=True, help="Only validate cached files")
@click.option("--only", multiple=True, help="Restrict to these instance names")
def fetch(manifest: Optional[Path], offline: bool, only: List[str]) -> None:
    """Download benchmark instances into the cache and verify their checksums."""
    settings.setup_directories()
    records = fetch_instances(manifest, offline=offline, only=list(only) or None)
    for record in records:
        click.echo(f"{record.name}\t{record.status}\t{record.path or record.error}")
    if any(record.status == "failed" for record in records):
        sys.exit(EXIT_PARTIAL)


@main.group()
def gen() -> None:
    """Generate synthetic instances as DIMACS files."""


@gen.command("random")
@click.argument("n", type=click.IntRange(min=0))
@click.argument("p", type=click.FloatRange(0.0, 1.0))
@click.option("--seed", type=click.IntRange(min=0), default=0)
@click.option("--output", "-o", type=click.Path(path_type=Path), required=True)
def gen_random(n: int, p: float, seed: int, output: Path) -> None:
    """Erdős–Rényi G(N, P)."""
    g = generate_random_graph(n, p, seed)
    write_dimacs(output, g, [f"G({n}, {p}) seed {seed}"])
    logger.info(f"wrote {g} to {output}")


@gen.command("paley")
@click.argument("q", type=click.IntRange(min=5))
@click.option("--output", "-o", type=click.Path(path_type=Path), required=True)
def gen_paley(q: int, output: Path) -> None:
    """Paley graph on GF(Q), Q a prime congruent to 1 mod 4."""
    try:
        g = paley_graph(q)
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint="Q")
    write_dimacs(output, g, [f"paley{q}"])
    logger.info(f"wrote {g} to {output}")


@main.command("export-qubo")
@click.argument("instance")
@click.option("--beta", "-b", default="1/2", callback=validate_beta)
@click.option("--complement/--no-complement", default=True)
@click.option("--output", "-o", type=click.Path(path_type=Path))
def export_qubo_command(
    instance: str, beta: Penalty, complement: bool, output: Optional[Path]
) -> None:
    """Write Q = -I + βA of INSTANCE as 'i j value' triples."""
    loaded = _load(instance, complement)
    _write(export_qubo(build_qubo(loaded.graph, beta)).encode(), output)


if __name__ == "__main__":
    main()
