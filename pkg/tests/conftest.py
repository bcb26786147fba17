"""Shared instances and seeded suites.

The named small graphs are hand-checkable: every expected value asserted
against them in the tests was derived by hand from the definitions
(matchings enumerated, blocks located by eye) before the library existed.
"""

from __future__ import annotations

import pytest

from extendix import (BipartiteGraph, Digraph, ZeroOneMatrix,
                      random_bipartite_with_pm)


def make_c6() -> BipartiteGraph:
    """The 6-cycle u1 w1 ... : edges u_i w_i and u_i w_{i+1}."""
    from extendix import cycle_bipartite

    return cycle_bipartite(3)


def make_p4() -> BipartiteGraph:
    """The path w1 - u1 - w2 - u2 (edges u1w1, u1w2, u2w2); unique
    perfect matching {u1w1, u2w2}."""
    return BipartiteGraph(2, frozenset({(0, 0), (0, 1), (1, 1)}))


def make_c4_pendant() -> BipartiteGraph:
    """A 4-cycle on u1,u2,w1,w2 plus the pendant matching edge u3w3 hung
    on u2 through the fixed single edge u2w3."""
    return BipartiteGraph(3, frozenset({(0, 0), (1, 1), (2, 2),
                                        (0, 1), (1, 0), (1, 2)}))


def make_two_fans() -> Digraph:
    """Two 2-cycles sharing vertex 0: a minimal strong digraph whose
    bipartite graph is not minimal 1-extendable."""
    return Digraph(3, frozenset({(0, 1), (1, 0), (0, 2), (2, 0)}))


@pytest.fixture
def c6():
    return make_c6()


@pytest.fixture
def p4():
    return make_p4()


@pytest.fixture
def k33():
    from extendix import complete_bipartite

    return complete_bipartite(3)


@pytest.fixture
def c4_pendant():
    return make_c4_pendant()


# ---------------------------------------------------------------------------
# seeded suites (deterministic; shared by the acceptance criteria)


def random_graph_suite(count: int = 500) -> list:
    ns = [2, 3, 4, 5, 6, 7]
    ps = [0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45]
    return [random_bipartite_with_pm(ns[i % 6], ps[i % 7], seed=9000 + i)
            for i in range(count)]


def random_matrix_suite(count: int = 300) -> list:
    import random

    out = []
    ns = [2, 3, 4, 5, 6]
    ps = [0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8]
    for i in range(count):
        rng = random.Random(5000 + i)
        n = ns[i % 5]
        p = ps[i % 7]
        rows = tuple(tuple(1 if rng.random() < p else 0 for _ in range(n))
                     for _ in range(n))
        out.append(ZeroOneMatrix(rows))
    return out


def random_digraph_suite(count: int = 120, n_lo: int = 5, n_hi: int = 6) -> list:
    from extendix import random_digraph

    out = []
    ps = [0.2, 0.3, 0.4, 0.5, 0.6]
    for i in range(count):
        n = n_lo + i % (n_hi - n_lo + 1)
        out.append(random_digraph(n, ps[i % 5], seed=7000 + i))
    return out
