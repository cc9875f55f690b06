import numpy as np
import pytest

from planarc5.config import Settings
from planarc5.graphs.base import Graph, from_edges


def cycle(n: int) -> Graph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


@pytest.fixture
def triangle() -> Graph:
    return cycle(3)


@pytest.fixture
def c5() -> Graph:
    return cycle(5)


@pytest.fixture
def k4() -> Graph:
    return complete(4)


@pytest.fixture
def k5() -> Graph:
    return complete(5)


@pytest.fixture
def k33() -> Graph:
    return complete_bipartite(3, 3)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240601)


@pytest.fixture
def quiet_settings() -> Settings:
    return Settings(progress=False, workers=1, chunk_size=8)
