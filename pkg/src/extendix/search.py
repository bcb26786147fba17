"""Exhaustive searches for minimal instances and for the one-way failure of
minimality transfer.

Fast paths work on per-vertex out-neighborhood bitmasks so the digraph
sweeps stay affordable; everything found is re-expressed through the
ordinary types before it leaves this module.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

from .core import BipartiteGraph, Digraph, iter_bipartite_with_canonical
from .correspond import bipartite_of_digraph
from .extendability import is_minimal_k_extendable


# ---------------------------------------------------------------------------
# bitmask strong-connectivity


def _mask_reach(outs: list[int], start: int, n: int) -> int:
    reach = 1 << start
    frontier = reach
    while frontier:
        new = 0
        f = frontier
        while f:
            bit = f & -f
            f ^= bit
            new |= outs[bit.bit_length() - 1]
        frontier = new & ~reach
        reach |= new
    return reach


def _mask_strong(outs: list[int], ins: list[int], n: int) -> bool:
    full = (1 << n) - 1
    return _mask_reach(outs, 0, n) == full and _mask_reach(ins, 0, n) == full


def _arcs_to_masks(n: int, arcs) -> tuple[list[int], list[int]]:
    outs = [0] * n
    ins = [0] * n
    for a, b in arcs:
        outs[a] |= 1 << b
        ins[b] |= 1 << a
    return outs, ins


def _mask_k_strong(n: int, arcs, k: int) -> bool:
    """For the small k used in sweeps: strong after removing every vertex
    subset of size below k."""
    if n < k + 1:
        return False
    outs, ins = _arcs_to_masks(n, arcs)
    if not _mask_strong(outs, ins, n):
        return False
    if k == 1:
        return True
    # remove each subset of size < k; sizes 1..k-1
    vertices = list(range(n))
    for size in range(1, k):
        for removed in combinations(vertices, size):
            keep = [v for v in vertices if v not in removed]
            remap = {v: i for i, v in enumerate(keep)}
            sub = [(remap[a], remap[b]) for a, b in arcs
                   if a not in removed and b not in removed]
            souts, sins = _arcs_to_masks(len(keep), sub)
            if not _mask_strong(souts, sins, len(keep)):
                return False
    return True


# ---------------------------------------------------------------------------
# minimal k-strong digraphs


def minimal_k_strong_digraphs(n: int, k: int) -> Iterator[Digraph]:
    """All minimal k-strong digraphs on n labelled vertices, exhaustively.

    For k = 1 the sweep enumerates arc sets of size n..2(n-1) only: a
    minimal strong digraph admits no single-arc ear, so every ear beyond
    the base cycle brings a new vertex, which caps the arc count at
    2(n-1).  Raw exhaustion over all 2^(n^2-n) digraphs is used up to
    n = 4 (and corroborates the cap in the tests).
    """
    if n < 2:
        return
    if k == 1 and n > 5:
        raise ValueError("exhaustive sweep for k = 1 is guarded to n <= 5")
    if k >= 2 and n > 4:
        raise ValueError("exhaustive sweep for k >= 2 is guarded to n <= 4")
    cells = [(i, j) for i in range(n) for j in range(n) if i != j]
    if k == 1 and n >= 5:
        for m in range(n, 2 * n - 1):
            for chosen in combinations(cells, m):
                if _is_minimal_k_strong_arcs(n, chosen, k):
                    yield Digraph(n, frozenset(chosen))
        return
    for mask in range(1 << len(cells)):
        chosen = tuple(cells[b] for b in range(len(cells)) if mask >> b & 1)
        if _is_minimal_k_strong_arcs(n, chosen, k):
            yield Digraph(n, frozenset(chosen))


def _is_minimal_k_strong_arcs(n: int, arcs, k: int) -> bool:
    outs = [0] * n
    ins = [0] * n
    for a, b in arcs:
        outs[a] |= 1 << b
        ins[b] |= 1 << a
    if any(o == 0 for o in outs) or any(i == 0 for i in ins):
        return False
    if not _mask_k_strong(n, arcs, k):
        return False
    arcs = list(arcs)
    for drop in range(len(arcs)):
        rest = arcs[:drop] + arcs[drop + 1:]
        if _mask_k_strong(n, rest, k):
            return False
    return True


# ---------------------------------------------------------------------------
# minimal k-extendable bipartite graphs


def minimal_k_extendable_graphs(n: int, k: int) -> Iterator[BipartiteGraph]:
    """All minimal k-extendable graphs on n+n vertices that contain the
    canonical matching.  Every graph with a perfect matching is a
    W-relabelling of such a graph, so degree-profile audits lose nothing.
    """
    if n > 4:
        raise ValueError("exhaustive bipartite sweep is guarded to n <= 4")
    for g in iter_bipartite_with_canonical(n):
        if is_minimal_k_extendable(g, k).holds:
            yield g


# ---------------------------------------------------------------------------
# failure of the converse minimality transfer


def find_minimality_counterexamples(n_max: int, k: int = 1,
                                    limit: int = 1) -> list[tuple]:
    """Minimal k-strong digraphs D whose bipartite graph B(D) is not
    minimal k-extendable, listed as (digraph, graph, deletable edge).

    Arc deletions in D match non-matching edge deletions in B(D), so any
    witness edge is necessarily a matching edge whose removal leaves a
    k-extendable graph.  Sizes beyond the exhaustive sweep guard are
    skipped silently (the small hits appear long before it binds).
    """
    cap = 5 if k == 1 else 4
    found = []
    for n in range(2, min(n_max, cap) + 1):
        for d in minimal_k_strong_digraphs(n, k):
            g, _, _ = bipartite_of_digraph(d)
            verdict = is_minimal_k_extendable(g, k)
            if not verdict.holds and verdict.witness is not None:
                found.append((d, g, verdict.witness))
                if len(found) >= limit:
                    return found
    return found
