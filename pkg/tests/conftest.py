"""Shared graphs and corpora for the test suite.

Corpora are generated once per session from fixed seeds, so every run sees
the same graphs.  Brute-force reference oracles live in the test modules
that use them, independent of the library code they check.
"""

from __future__ import annotations

import random
from itertools import combinations

import pytest

from treealpha.graph import Graph


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph(n, [(a, b) for a in range(n) for b in range(a + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def edgeless(n: int) -> Graph:
    return Graph(n, [])


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph(n, edges)


@pytest.fixture(scope="session")
def rng():
    return random.Random(20250808)


@pytest.fixture(scope="session")
def p5_kll_corpus():
    """Certified {P5, K_ll}-free graphs: list of (graph, ell, seed)."""
    from treealpha.harness import gen_class_free

    out = []
    for seed in range(48):
        for ell in (2, 3):
            n = 4 + (seed * 5) % 25
            g = gen_class_free(n, seed, [("path", 5), ("biclique", ell, ell)])
            out.append((g, ell, seed))
    return out


@pytest.fixture(scope="session")
def p5_corpus():
    """Certified P5-free graphs (bicliques allowed): list of (graph, seed)."""
    from treealpha.harness import gen_p5_free

    out = []
    for seed in range(30):
        method = "union-join" if seed % 2 else "perturb-filter"
        n = 3 + (seed * 3) % 20
        out.append((gen_p5_free(n, seed, method), seed))
    return out
