import random

import pytest

from minorgap import ForbiddenSet, Graph, make_graph, named_graph


def forbid(*names: str) -> ForbiddenSet:
    return ForbiddenSet([named_graph(n) for n in names])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return make_graph(n, edges)


@pytest.fixture
def rng():
    return random.Random(20250825)
