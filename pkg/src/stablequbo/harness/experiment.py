"""Penalty sweeps: every instance of an ExperimentSpec at every β of its grid."""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional

from loguru import logger
from tqdm import tqdm

from stablequbo.core.errors import StableQuboError
from stablequbo.core.graph import edge_density, is_stable_set
from stablequbo.core.models import ResultRow
from stablequbo.harness.instances import LoadedInstance, load_instance
from stablequbo.harness.registry import known_alpha
from stablequbo.harness.spec import ExperimentSpec
from stablequbo.partition import solve_with_partitioning
from stablequbo.postprocess import post_process
from stablequbo.qubo import post_penalty
from stablequbo.samplers import derive_seed, make_sampler


@dataclass(frozen=True)
class Cell:
    """One instance x β job; ``instance_index`` and ``beta_index`` address its seed."""

    instance: LoadedInstance
    beta: Fraction
    spec: ExperimentSpec
    instance_index: int
    beta_index: int


def _base_row(cell: Cell) -> Dict[str, Any]:
    g = cell.instance.graph
    return dict(
        instance=cell.instance.name,
        complemented=cell.instance.complemented,
        n=g.n,
        m=g.m,
        density=edge_density(g),
        alpha_known=known_alpha(cell.instance.name),
        beta=cell.beta,
        mode=cell.spec.mode,
        sampler=cell.spec.sampler,
    )


def run_cell(cell: Cell) -> ResultRow:
    """Sample, post-process and verify one cell; failures end up in ``error``."""
    spec, g = cell.spec, cell.instance.graph
    seed = derive_seed(spec.seed, cell.instance_index, cell.beta_index)
    post_seed = derive_seed(seed, 1)
    row = _base_row(cell)
    try:
        s, s_post = make_sampler(spec.sampler), make_sampler(spec.post_sampler)
        if spec.mode == "partitioned":
            report = solve_with_partitioning(
                g,
                cell.beta,
                post_penalty(cell.beta),
                s,
                s_post,
                spec.sampler_config(seed),
                spec.post_config(post_seed),
            )
            row.update(partitions_solved=report.partitions_solved)
        else:
            samples = s.sample(g, cell.beta, spec.sampler_config(seed))
            report = post_process(
                g, samples, post_penalty(cell.beta), s_post, spec.post_config(post_seed)
            )
            row.update(x1_vertices=report.x1_vertices, x1_edges=report.x1_edges)
    except StableQuboError as e:
        logger.error(f"{cell.instance.name} at beta={cell.beta} failed: {e}")
        return ResultRow(**row, error=str(e))

    if not is_stable_set(g, frozenset(report.witness)) or len(report.witness) != report.best:
        raise AssertionError(f"{cell.instance.name}: reported witness is not a stable set")
    known = row["alpha_known"]
    if known is not None and report.best > known:
        logger.warning(
            f"{cell.instance.name}: found a stable set of size {report.best} > published {known}"
        )
    row.update(
        alpha_hat=report.alpha_hat,
        alpha_hat_post=report.best,
        recalculations=report.recalculations,
        largest_component=report.largest_component,
    )
    return ResultRow(**row)


def _failed_rows(identifier: str, spec: ExperimentSpec, error: Exception) -> List[ResultRow]:
    return [
        ResultRow(
            instance=identifier,
            complemented=spec.complement,
            beta=beta,
            mode=spec.mode,
            sampler=spec.sampler,
            error=str(error),
        )
        for beta in spec.betas
    ]


def run_experiment(
    spec: ExperimentSpec, base_dir: Optional[Path] = None, progress: bool = False
) -> List[ResultRow]:
    """Run every instance x β cell of ``spec``.

    Rows come back in instance order, then grid order, whatever the number of workers.
    Unreadable instances and failing cells produce rows with ``error`` set; the run
    continues.

    Parameters
    ----------
    spec : ExperimentSpec
        The sweep to run
    base_dir : Optional[Path]
        Directory relative instance paths are resolved against
    progress : bool
        Show a progress bar over cells

    Returns
    -------
    List[ResultRow]
        One row per instance and β
    """
    slots: List[object] = []
    cells: List[Cell] = []
    for a, identifier in enumerate(spec.instances):
        try:
            instance = load_instance(identifier, spec.complement, base_dir)
        except (StableQuboError, OSError) as e:
            logger.error(f"could not load instance {identifier!r}: {e}")
            slots.extend(_failed_rows(identifier, spec, e))
            continue
        logger.info(f"loaded {instance.name}: n={instance.graph.n}, m={instance.graph.m}")
        for b, beta in enumerate(spec.betas):
            cell = Cell(instance, beta, spec, a, b)
            slots.append(cell)
            cells.append(cell)

    bar = dict(total=len(cells), desc="Running cells", disable=not progress)
    if spec.workers > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=spec.workers) as executor:
            results = list(tqdm(executor.map(run_cell, cells), **bar))
    else:
        results = [run_cell(cell) for cell in tqdm(cells, **bar)]

    computed = iter(results)
    return [next(computed) if isinstance(slot, Cell) else slot for slot in slots]
