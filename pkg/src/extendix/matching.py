"""Matching computation, enumeration, edge classification.

Classification of fixed edges uses the two polynomial deletion criteria
(graph minus an edge's endpoints; graph minus the edge itself); the
enumeration-based definition survives only as a test oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .core import BipartiteGraph, Matching


# ---------------------------------------------------------------------------
# maximum matching (augmenting paths; deterministic scan order)


def _augment(adj, match_w, i, seen) -> bool:
    for j in adj[i]:
        if j in seen:
            continue
        seen.add(j)
        if match_w.get(j) is None or _augment(adj, match_w, match_w[j], seen):
            match_w[j] = i
            return True
    return False


def max_matching_pairs(g: BipartiteGraph,
                       dead_u: frozenset = frozenset(),
                       dead_w: frozenset = frozenset(),
                       banned_edge=None) -> dict[int, int]:
    """u -> w pairing of a maximum matching, optionally avoiding vertices
    or one edge.  Deterministic for a fixed graph."""
    adj = []
    for i in range(g.n):
        if i in dead_u:
            adj.append(())
        else:
            adj.append(tuple(j for j in g.u_neighbors(i)
                             if j not in dead_w and (i, j) != banned_edge))
    match_w: dict[int, int] = {}
    for i in range(g.n):
        if i not in dead_u:
            _augment(adj, match_w, i, set())
    return {i: j for j, i in match_w.items()}


def max_matching(g: BipartiteGraph) -> Matching:
    """A maximum matching of g; perfect exactly when its size is n."""
    pairs = max_matching_pairs(g)
    return Matching(frozenset(pairs.items()), g)


def has_perfect_matching(g: BipartiteGraph,
                         dead_u: frozenset = frozenset(),
                         dead_w: frozenset = frozenset(),
                         banned_edge=None) -> bool:
    """Whether the graph minus the given vertices/edge has a matching that
    saturates every remaining vertex (requires |dead_u| == |dead_w|)."""
    if len(dead_u) != len(dead_w):
        return False
    pairs = max_matching_pairs(g, dead_u, dead_w, banned_edge)
    return len(pairs) == g.n - len(dead_u)


# memoised variant keyed by vertex masks; used heavily by the extension oracle
@lru_cache(maxsize=1 << 18)
def _has_pm_masked(g: BipartiteGraph, dead_u_mask: int, dead_w_mask: int) -> bool:
    dead_u = frozenset(i for i in range(g.n) if dead_u_mask >> i & 1)
    dead_w = frozenset(j for j in range(g.n) if dead_w_mask >> j & 1)
    return has_perfect_matching(g, dead_u, dead_w)


def matching_extends(g: BipartiteGraph, matching: Matching) -> bool:
    """Whether the matching is contained in some perfect matching of g."""
    um = wm = 0
    for i, j in matching.edges:
        um |= 1 << i
        wm |= 1 << j
    return _has_pm_masked(g, um, wm)


# ---------------------------------------------------------------------------
# enumeration


def enumerate_matchings(g: BipartiteGraph, k: int) -> Iterator[Matching]:
    """Stream every matching of size k, each exactly once, in lexicographic
    order of the sorted edge list."""
    if not 0 <= k <= g.n:
        raise ValueError(f"k must lie in 0..{g.n}, got {k}")
    edges = g.sorted_edges()

    def rec(start: int, chosen: list, used_u: int, used_w: int):
        if len(chosen) == k:
            yield Matching(frozenset(chosen), g)
            return
        for idx in range(start, len(edges)):
            if len(edges) - idx < k - len(chosen):
                break
            i, j = edges[idx]
            if used_u >> i & 1 or used_w >> j & 1:
                continue
            chosen.append((i, j))
            yield from rec(idx + 1, chosen, used_u | 1 << i, used_w | 1 << j)
            chosen.pop()

    yield from rec(0, [], 0, 0)


def perfect_matchings(g: BipartiteGraph) -> Iterator[Matching]:
    return enumerate_matchings(g, g.n)


def first_perfect_matching(g: BipartiteGraph) -> Matching | None:
    """The lexicographically first perfect matching, or None."""
    for m in perfect_matchings(g):
        return m
    return None


def count_perfect_matchings(g: BipartiteGraph) -> int:
    """Exact count by dynamic programming over free-column masks."""
    n = g.n
    masks = [0] * n
    for i, j in g.edges:
        masks[i] |= 1 << j
    memo: dict[int, int] = {}

    def rec(i: int, free: int) -> int:
        if i == n:
            return 1
        key = free  # row index is implied by popcount
        if key in memo:
            return memo[key]
        total = 0
        avail = masks[i] & free
        while avail:
            bit = avail & -avail
            avail ^= bit
            total += rec(i + 1, free ^ bit)
        memo[key] = total
        return total

    return rec(0, (1 << n) - 1)


# ---------------------------------------------------------------------------
# fixed / non-fixed edge classification


@dataclass(frozen=True)
class EdgeClassification:
    """Partition of E(G) into fixed-single, fixed-double and non-fixed edges.

    A fixed single edge lies in no perfect matching, a fixed double edge in
    all of them.
    """

    graph: BipartiteGraph
    fixed_single: frozenset
    fixed_double: frozenset
    nonfixed: frozenset

    def tag(self, edge) -> str:
        edge = tuple(edge)
        if edge in self.fixed_single:
            return "fixed_single"
        if edge in self.fixed_double:
            return "fixed_double"
        if edge in self.nonfixed:
            return "allowed_nonfixed"
        raise KeyError(f"{edge} is not an edge of the graph")

    @property
    def counts(self) -> dict[str, int]:
        return {
            "fixed_single": len(self.fixed_single),
            "fixed_double": len(self.fixed_double),
            "allowed_nonfixed": len(self.nonfixed),
        }


def classify_edges(g: BipartiteGraph) -> EdgeClassification:
    """Classify every edge.  Requires at least one perfect matching.

    An edge uw lies in some perfect matching iff G - {u, w} has one, and in
    every perfect matching iff G - uw has none.
    """
    if not has_perfect_matching(g):
        raise ValueError("graph has no perfect matching")
    single, double, nonfixed = set(), set(), set()
    for i, j in g.sorted_edges():
        in_some = has_perfect_matching(g, frozenset({i}), frozenset({j}))
        if not in_some:
            single.add((i, j))
        elif not has_perfect_matching(g, banned_edge=(i, j)):
            double.add((i, j))
        else:
            nonfixed.add((i, j))
    return EdgeClassification(g, frozenset(single), frozenset(double),
                              frozenset(nonfixed))


# ---------------------------------------------------------------------------
# unique perfect matching => derived digraph is acyclic


@dataclass(frozen=True)
class AcyclicCheckReport:
    graph: BipartiteGraph
    acyclic: bool
    topological_order: tuple


def unique_pm_acyclic_check(g: BipartiteGraph) -> AcyclicCheckReport:
    """For a graph with exactly one perfect matching, derive the digraph and
    certify it acyclic with a topological order of its vertices."""
    from .correspond import digraph_of
    from .connectivity import strong_components

    count = count_perfect_matchings(g)
    if count != 1:
        raise ValueError(f"graph has {count} perfect matchings, expected exactly 1")
    m = first_perfect_matching(g)
    d, _ = digraph_of(g, m)
    comps = strong_components(d)
    acyclic = all(len(c) == 1 for c in comps) and not any(
        (v, v) in d.arcs for v in range(d.n))
    order = tuple(min(c) for c in comps)
    return AcyclicCheckReport(g, acyclic, order if acyclic else ())


# ---------------------------------------------------------------------------
# symmetric difference of two matchings


@dataclass(frozen=True)
class AltComponent:
    """One component of M1 (symmetric difference) M2: an alternating cycle
    or path, as a tagged vertex walk with its edge sequence."""

    kind: str  # "cycle" | "path"
    vertices: tuple
    edges: tuple


def symmetric_difference(m1: Matching, m2: Matching) -> tuple[AltComponent, ...]:
    """Decompose M1 (symmetric difference) M2 into alternating cycles and paths.

    Every vertex of the difference subgraph has degree at most 2, so the
    components are exactly paths and even cycles.
    """
    if m1.host != m2.host:
        raise ValueError("matchings have different host graphs")
    diff = m1.edges ^ m2.edges
    if not diff:
        return ()
    adj: dict[tuple, list] = {}
    for i, j in sorted(diff):
        adj.setdefault(("u", i), []).append(("w", j))
        adj.setdefault(("w", j), []).append(("u", i))

    def edge_of(a, b):
        return (a[1], b[1]) if a[0] == "u" else (b[1], a[1])

    visited = set()

    def fresh(v):
        return any(frozenset((v, nb)) not in visited for nb in adj[v])

    def walk_from(start):
        walk = [start]
        while True:
            here = walk[-1]
            nxt = None
            for nb in adj[here]:
                if frozenset((here, nb)) not in visited:
                    nxt = nb
                    break
            if nxt is None:
                return walk
            visited.add(frozenset((here, nxt)))
            walk.append(nxt)

    comps = []
    # paths start at degree-1 endpoints; whatever remains closes into cycles
    for start in sorted(adj):
        if len(adj[start]) == 1 and fresh(start):
            walk = walk_from(start)
            comps.append(AltComponent(
                "path", tuple(walk),
                tuple(edge_of(walk[t], walk[t + 1]) for t in range(len(walk) - 1))))
    for start in sorted(adj):
        if fresh(start):
            walk = walk_from(start)
            comps.append(AltComponent(
                "cycle", tuple(walk),
                tuple(edge_of(walk[t], walk[t + 1]) for t in range(len(walk) - 1))))
    return tuple(comps)


def flip_alternating_cycle(m: Matching, cycle_edges) -> Matching:
    """Symmetric difference of a perfect matching with one alternating cycle;
    yields another perfect matching."""
    edges = set(m.edges)
    for e in cycle_edges:
        e = tuple(e)
        if e in edges:
            edges.remove(e)
        else:
            edges.add(e)
    return Matching(frozenset(edges), m.host)
