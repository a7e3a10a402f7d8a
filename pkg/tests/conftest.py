import random

import numpy as np
import pytest

from ktuple import Graph, ZeroOneMatrix, web_graph, WebParams
from ktuple.generate import CoBiconvexSpec, random_cobiconvex

# augmented adjacency matrix of the running co-biconvex example
GPRIME_ROWS = [
    "1111001",
    "1110001",
    "1110111",
    "1001111",
    "0011111",
    "0011111",
    "1111111",
]

# proper interval example from the same figure
B_ROWS = [
    "10010",
    "01011",
    "00101",
    "11011",
    "01111",
]


def graph_from_rows(rows):
    n = len(rows)
    edges = [(i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if rows[i][j] == "1"]
    return Graph(n, edges)


def matrix_from_rows(rows):
    return ZeroOneMatrix.from_rows([[int(c) for c in r] for r in rows])


def cobiconvex_corpus(count=300, max_n=12):
    """Seeded instances with at most ``max_n`` vertices; yields (seed, graph)."""
    for seed in range(count):
        rng = random.Random(seed)
        u = rng.choice([0, 0, 0, 1, 1, 2, 3])
        c1 = rng.randint(1, 6)
        c2 = rng.randint(1, 6)
        while c1 + c2 + u > max_n:
            if c1 >= c2:
                c1 -= 1
            else:
                c2 -= 1
        width = rng.choice([None, None, 1, 2, 3])
        yield seed, random_cobiconvex(CoBiconvexSpec(c1, c2, u, width=width, seed=seed))


def random_matrix(rng, rows, cols, density=None):
    p = rng.uniform(0.2, 0.8) if density is None else density
    return ZeroOneMatrix(np.array([[rng.random() < p for _ in range(cols)] for _ in range(rows)], dtype=np.uint8))


@pytest.fixture
def gprime():
    return graph_from_rows(GPRIME_ROWS)


@pytest.fixture
def w15():
    return web_graph(WebParams(15, 4))


@pytest.fixture(scope="session")
def corpus():
    return list(cobiconvex_corpus())


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
