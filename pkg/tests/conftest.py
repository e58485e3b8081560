"""Independent brute-force helpers shared by the tests.

These work from plain edge lists and vertex triples and never touch the
bitset neighbour masks used by the library.
"""

import random
from itertools import combinations

import pytest

from triex.graph import Graph


def brute_triangles(g: Graph) -> int:
    es = set(g.edges())
    return sum(
        1
        for a, b, c in combinations(range(g.vertex_count), 3)
        if (a, b) in es and (a, c) in es and (b, c) in es
    )


def brute_max_triangles(n_edges: int, n_vertices: int) -> int:
    """Max triangle count over every n_edges-subset of K_{n_vertices}, via triple scans."""
    pairs = list(combinations(range(n_vertices), 2))
    triples = list(combinations(range(n_vertices), 3))
    best = -1
    for sub in combinations(pairs, n_edges):
        es = set(sub)
        t = sum(1 for a, b, c in triples if (a, b) in es and (a, c) in es and (b, c) in es)
        best = max(best, t)
    return best


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph.from_edges(n, [(i, j) for i, j in combinations(range(n), 2) if rng.random() < p])


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULTS, key=lambda s: int(s[1:3])):
            terminalreporter.write_line(line)
