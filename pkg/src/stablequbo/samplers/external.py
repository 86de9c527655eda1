"""Adapter for samplers living outside this process: a command or an HTTP endpoint.

The QUBO goes out in the ``i j p/q`` triple format of ``export_qubo``; the answer must be
one length-n 0/1 string per line, one line per sample. Costs are always recomputed here.
"""

import shlex
import subprocess
from typing import List

import requests
from loguru import logger

from stablequbo.config import settings
from stablequbo.core.errors import (
    AssignmentLengthError,
    ExternalTransportError,
    MalformedResponseError,
)
from stablequbo.core.graph import Graph
from stablequbo.qubo import Penalty, QuboInstance, SampleSet, export_qubo
from stablequbo.samplers.base import SamplerConfig, SamplerContract


def parse_assignments(text: str, n: int) -> List[List[int]]:
    """Parse one 0/1 string per non-blank line and check its length."""
    assignments = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        if set(line) - {"0", "1"}:
            raise MalformedResponseError(f"line {lineno} is not a 0/1 string: {line[:40]!r}")
        if len(line) != n:
            raise AssignmentLengthError(
                f"line {lineno} has {len(line)} bits, expected {n}"
            )
        assignments.append([int(c) for c in line])
    if not assignments:
        raise MalformedResponseError("external sampler returned no assignments")
    return assignments


class ExternalSampler(SamplerContract):
    """Sampler behind a shell command (QUBO on stdin) or an http(s) URL (QUBO as body).

    Parameters
    ----------
    target : str
        Command line, or URL starting with ``http://`` / ``https://``
    timeout : float
        Seconds to wait for an answer
    """

    name = "external"

    def __init__(self, target: str, timeout: float = settings.HTTP_TIMEOUT) -> None:
        if not target.strip():
            raise ValueError("external sampler needs a command or URL")
        self.target = target
        self.timeout = timeout

    @property
    def is_http(self) -> bool:
        return self.target.startswith(("http://", "https://"))

    def _exchange(self, payload: str, config: SamplerConfig) -> str:
        params = {"reads": config.reads, "seed": config.seed}
        if self.is_http:
            try:
                response = requests.post(
                    self.target, data=payload.encode(), params=params, timeout=self.timeout
                )
                response.raise_for_status()
            except requests.RequestException as e:
                raise ExternalTransportError(f"request to {self.target} failed: {e}") from e
            return response.text
        try:
            completed = subprocess.run(
                shlex.split(self.target),
                input=payload,
                capture_output=True,
                text=True,
                timeout=self.timeout,
                check=False,
            )
        except (OSError, subprocess.SubprocessError) as e:
            raise ExternalTransportError(f"could not run {self.target!r}: {e}") from e
        if completed.returncode != 0:
            raise ExternalTransportError(
                f"{self.target!r} exited with {completed.returncode}: {completed.stderr.strip()}"
            )
        return completed.stdout

    def _sample(self, g: Graph, beta: Penalty, config: SamplerConfig) -> SampleSet:
        payload = export_qubo(QuboInstance(g, beta))
        logger.debug(f"sending QUBO with n={g.n} to external sampler {self.target!r}")
        assignments = parse_assignments(self._exchange(payload, config), g.n)
        return SampleSet.from_assignments(g, assignments, beta, config.reads)
