from typing import Callable, Iterator, List, Tuple

import pytest
from loguru import logger

from stablequbo.core.graph import Graph
from tests.helpers import brute_alpha


@pytest.fixture
def alpha_oracle() -> Callable[[Graph], int]:
    return brute_alpha


@pytest.fixture
def k2() -> Graph:
    return Graph.from_edges(2, [(0, 1)])


@pytest.fixture
def p3() -> Graph:
    return Graph.from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def c5() -> Graph:
    return Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])


@pytest.fixture
def five_vertex_graph() -> Graph:
    """Edges v1v4, v2v3, v2v4, v3v4, v2v5 (1-based); α = 3 with {v1, v3, v5}."""
    return Graph.from_edges(5, [(0, 3), (1, 2), (1, 3), (2, 3), (1, 4)])


@pytest.fixture
def star_30() -> Tuple[Graph, frozenset]:
    """30 vertices where vertex 0 is adjacent to 1..5 and nothing else has edges."""
    return Graph.from_edges(30, [(0, k) for k in range(1, 6)]), frozenset(range(30))


@pytest.fixture
def log_messages() -> Iterator[List[str]]:
    """Capture loguru output for the duration of a test."""
    messages: List[str] = []
    handler_id = logger.add(messages.append, level="DEBUG", format="{level} {message}")
    yield messages
    logger.remove(handler_id)
