"""k-extendability of balanced bipartite graphs by three independent routes,
minimality, bipartite ear decomposition, alternating path systems, and the
decomposition into elementary components.

A connected graph is k-extendable when it has a matching of size k and
every size-k matching extends to a perfect matching.  The production route
decides this through the derived digraph (k-extendable iff the digraph of
(G, M) is k-strong, for any perfect matching M); the enumeration oracle and
the neighborhood-count criterion exist as independent checks.

Conventions at the margins:

* 0-extendable means "has a perfect matching" (no connectivity demand).
* a disconnected graph is never k-extendable for k >= 1.
* the single edge K2 is reported 1-extendable by the oracle (it has a
  perfect matching and its edge lies in one) although the definitional
  size cap 2k+1 <= 2n excludes it; the cap violation is flagged, never
  hidden.  The digraph route keeps its literal answer (a one-vertex
  digraph is not 1-strong), so the two routes are compared on n >= 2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (BipartiteGraph, Digraph, Matching, TooLargeError, connected,
                   u_label, w_label)
from .correspond import alternating_path_from_digraph_path, digraph_of
from .matching import (classify_edges, enumerate_matchings, first_perfect_matching,
                       has_perfect_matching, matching_extends)
from .connectivity import (cycles_through_vertex, ear_decomposition_digraph,
                           is_k_strong, is_minimal_k_strong, menger_paths,
                           strong_components, MinimalityResult,
                           anti_directed_trail_find)


# ---------------------------------------------------------------------------
# the production decision route


def is_k_extendable(g: BipartiteGraph, k: int) -> bool:
    """The fast decision: connectivity plus k-strength of the derived
    digraph under the lexicographically first perfect matching."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return has_perfect_matching(g)
    if g.n >= 2 and not connected(g):
        return False
    m = first_perfect_matching(g)
    if m is None:
        return False
    d, _ = digraph_of(g, m)
    return is_k_strong(d, k).holds


def is_k_extendable_via_digraph(g: BipartiteGraph, m: Matching, k: int) -> bool:
    """Literally: is the digraph of (G, M) k-strong?  Independent of the
    choice of perfect matching M."""
    d, _ = digraph_of(g, m)
    return is_k_strong(d, k).holds


def max_extendability(g: BipartiteGraph) -> int:
    """Largest k with G k-extendable; 0 when there is none (no perfect
    matching, or disconnected on n >= 2)."""
    from .connectivity import vertex_connectivity

    m = first_perfect_matching(g)
    if m is None:
        return 0
    if g.n >= 2 and not connected(g):
        return 0
    d, _ = digraph_of(g, m)
    return vertex_connectivity(d)


# ---------------------------------------------------------------------------
# enumeration oracle


@dataclass(frozen=True)
class ExtendabilityVerdict:
    holds: bool
    witness: Matching | None = None  # a non-extendable size-k matching
    cap_violated: bool = False
    reason: str = ""

    def __bool__(self) -> bool:
        return self.holds


def is_k_extendable_oracle(g: BipartiteGraph, k: int) -> ExtendabilityVerdict:
    """Definitional check: connectivity, existence of a size-k matching,
    then extension of every enumerated size-k matching.

    Exhaustive in the number of size-k matchings, hence guarded to small n.
    The size cap (k <= n-1 for n >= 2) is reported via ``cap_violated``
    rather than forced into the verdict.
    """
    if g.n > 9:
        raise TooLargeError(f"oracle enumerates matchings; n={g.n} exceeds the guard")
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        ok = has_perfect_matching(g)
        return ExtendabilityVerdict(ok, reason="" if ok else "no perfect matching")
    cap = 2 * k + 1 > 2 * g.n - 1
    if not connected(g):
        return ExtendabilityVerdict(False, cap_violated=cap, reason="disconnected")
    any_matching = False
    for m0 in enumerate_matchings(g, k):
        any_matching = True
        if not matching_extends(g, m0):
            return ExtendabilityVerdict(False, m0, cap,
                                        "matching does not extend to a perfect one")
    if not any_matching:
        return ExtendabilityVerdict(False, cap_violated=cap,
                                    reason=f"no matching of size {k}")
    return ExtendabilityVerdict(True, cap_violated=cap)


# ---------------------------------------------------------------------------
# neighborhood route


@dataclass(frozen=True)
class NeighborhoodVerdict:
    holds: bool
    deficient_set: tuple | None = None  # X in U with |N(X)| < |X| + k
    cap_violated: bool = False
    reason: str = ""

    def __bool__(self) -> bool:
        return self.holds


def is_k_extendable_via_neighborhood(g: BipartiteGraph, k: int) -> NeighborhoodVerdict:
    """Neighborhood-count criterion: G connected and |N(X)| >= |X| + k for
    every nonempty X in U with |X| <= n - k.  Subset-exhaustive."""
    n = g.n
    if n > 16:
        raise TooLargeError(f"neighborhood audit enumerates subsets; n={n} exceeds the guard")
    if k < 1:
        raise ValueError("k must be at least 1 for the neighborhood route")
    cap = 2 * k + 1 > 2 * n - 1
    if not connected(g):
        return NeighborhoodVerdict(False, cap_violated=cap, reason="disconnected")
    nbr = [0] * n
    for i, j in g.edges:
        nbr[i] |= 1 << j
    for mask in range(1, 1 << n):
        size = bin(mask).count("1")
        if size > n - k:
            continue
        union = 0
        mm = mask
        while mm:
            bit = mm & -mm
            union |= nbr[bit.bit_length() - 1]
            mm ^= bit
        if bin(union).count("1") < size + k:
            x = tuple(i for i in range(n) if mask >> i & 1)
            return NeighborhoodVerdict(False, x, cap,
                                       f"|N(X)| = {bin(union).count('1')} < {size + k}")
    return NeighborhoodVerdict(True, cap_violated=cap)


# ---------------------------------------------------------------------------
# minimality


def is_minimal_k_extendable(g: BipartiteGraph, k: int) -> MinimalityResult:
    """k-extendable, and every single-edge deletion destroys that."""
    if not is_k_extendable(g, k):
        return MinimalityResult(False, None, f"not {k}-extendable")
    for edge in g.sorted_edges():
        if is_k_extendable(g.without_edge(edge), k):
            return MinimalityResult(False, edge, "edge is deletable")
    return MinimalityResult(True)


@dataclass(frozen=True)
class TransferReport:
    ok: bool
    digraph: Digraph
    digraph_minimality: MinimalityResult


def minimality_transfer_check(g: BipartiteGraph, m: Matching, k: int) -> TransferReport:
    """For a minimal k-extendable G, the digraph of (G, M) must be minimal
    k-strong.  The converse direction is not asserted anywhere: a minimal
    digraph may sit above a non-minimal graph (deleting a matching edge is
    invisible on the arc side)."""
    verdict = is_minimal_k_extendable(g, k)
    if not verdict.holds:
        raise ValueError(f"graph is not minimal {k}-extendable: {verdict.reason}")
    d, _ = digraph_of(g, m)
    res = is_minimal_k_strong(d, k)
    return TransferReport(res.holds, d, res)


# ---------------------------------------------------------------------------
# bipartite ear decomposition


@dataclass(frozen=True)
class EarDecompositionB:
    """Base edge plus odd ears, with the induced perfect matching.

    Each ear is a tagged vertex walk ((side, index), ...) of odd edge
    length whose endpoints lie in opposite colour classes of the graph
    built so far; the induced matching restricts to a perfect matching of
    every prefix.
    """

    base_edge: tuple
    ears: tuple
    matching: Matching

    @property
    def ear_count(self) -> int:
        return len(self.ears)


def _walk_edges(walk) -> list:
    out = []
    for a, b in zip(walk, walk[1:]):
        out.append((a[1], b[1]) if a[0] == "u" else (b[1], a[1]))
    return out


def check_bipartite_ear_decomposition(g: BipartiteGraph, dec: EarDecompositionB) -> list[str]:
    """Structural verification of the ear rules, exact coverage, and the
    prefix property of the induced matching."""
    problems = []
    base = tuple(dec.base_edge)
    if base not in g.edges:
        problems.append(f"base edge {base} missing from graph")
    covered = {base}
    vertices = {("u", base[0]), ("w", base[1])}
    if base not in dec.matching.edges:
        problems.append("induced matching misses the base edge")
    for idx, ear in enumerate(dec.ears):
        edges = _walk_edges(ear)
        if len(edges) % 2 == 0 or not edges:
            problems.append(f"ear {idx} has even length {len(edges)}")
        if ear[0][0] == ear[-1][0]:
            problems.append(f"ear {idx} endpoints lie in the same class")
        for v in (ear[0], ear[-1]):
            if v not in vertices:
                problems.append(f"ear {idx} endpoint {v} is new")
        for v in ear[1:-1]:
            if v in vertices:
                problems.append(f"ear {idx} interior vertex {v} is old")
        if len(set(ear)) != len(ear):
            problems.append(f"ear {idx} repeats a vertex")
        for e in edges:
            if e not in g.edges:
                problems.append(f"ear {idx} uses missing edge {e}")
            if e in covered:
                problems.append(f"ear {idx} repeats edge {e}")
        # the even-position edges cover the ear interior within the matching
        for pos, e in enumerate(edges):
            in_m = e in dec.matching.edges
            if pos % 2 == 1 and not in_m:
                problems.append(f"ear {idx} interior edge {e} not in induced matching")
            if pos % 2 == 0 and in_m:
                problems.append(f"ear {idx} boundary edge {e} lies in induced matching")
        covered.update(edges)
        vertices.update(ear)
    if covered != set(g.edges):
        problems.append("edges not exactly covered")
    return problems


def bipartite_ear_decomposition(g: BipartiteGraph, start_edge) -> EarDecompositionB:
    """Grow G from any starting edge by attaching odd ears; possible exactly
    when G is 1-extendable.

    Rides the digraph ear decomposition: pick a perfect matching M through
    the starting edge, decompose the digraph of (G, M) starting from a
    cycle through the edge's vertex, and pull every ear back.  The induced
    matching is exactly M.
    """
    start_edge = tuple(start_edge)
    if start_edge not in g.edges:
        raise ValueError(f"{start_edge} is not an edge")
    if not is_k_extendable(g, 1) and not (g.n == 1 and g.m == 1):
        raise ValueError("graph is not 1-extendable")
    m = _pm_through_edge(g, start_edge)
    if g.n == 1:
        return EarDecompositionB(start_edge, (), m)
    d, cmap = digraph_of(g, m)
    hub = cmap.vertex_of_matching_edge(start_edge)
    cycle = _cycle_through(d, hub)
    ddec = ear_decomposition_digraph(d, cycle)

    # the base cycle's pullback runs from the u-side to the w-side of the
    # starting edge, which is exactly the first odd ear; later ears pull
    # back the same way
    ears = tuple(alternating_path_from_digraph_path(cmap, ear)
                 for ear in ddec.ears)
    dec = EarDecompositionB(start_edge, ears, m)
    problems = check_bipartite_ear_decomposition(g, dec)
    if problems:
        raise AssertionError(f"invalid bipartite ear decomposition: {problems}")
    return dec


def _pm_through_edge(g: BipartiteGraph, edge) -> Matching:
    from .matching import max_matching_pairs

    i, j = edge
    pairs = max_matching_pairs(g, frozenset({i}), frozenset({j}))
    if len(pairs) != g.n - 1:
        raise ValueError(f"edge {edge} lies in no perfect matching")
    pairs[i] = j
    return Matching(frozenset(pairs.items()), g)


def _cycle_through(d: Digraph, v: int) -> tuple:
    """Shortest directed cycle through v, as an open vertex tuple."""
    from collections import deque

    dist = {v: 0}
    parent = {}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for y in d.out_neighbors(x):
            if y not in dist:
                dist[y] = dist[x] + 1
                parent[y] = x
                queue.append(y)
    best = None
    for x in d.in_neighbors(v):
        if x in dist and x != v:
            path = [x]
            while path[-1] != v:
                path.append(parent[path[-1]])
            path.reverse()
            cand = tuple(path)
            if best is None or (len(cand), cand) < (len(best), best):
                best = cand
    if best is None:
        raise ValueError(f"no cycle through vertex {v}")
    return best


# ---------------------------------------------------------------------------
# alternating path systems


@dataclass(frozen=True)
class AltPathSystem:
    """Internally disjoint alternating paths between u in U and w in W,
    each starting and ending with non-matching edges."""

    paths: tuple
    matching: Matching
    u: int
    w: int


def check_alternating_path_system(g: BipartiteGraph, system: AltPathSystem) -> list[str]:
    problems = []
    m_edges = system.matching.edges
    interiors = []
    for walk in system.paths:
        if walk[0] != ("u", system.u) or walk[-1] != ("w", system.w):
            problems.append(f"walk {walk} does not join "
                            f"{u_label(system.u)} and {w_label(system.w)}")
        if len(set(walk)) != len(walk):
            problems.append(f"walk {walk} repeats a vertex")
        edges = _walk_edges(walk)
        if len(edges) % 2 == 0:
            problems.append(f"walk {walk} has even length")
        for pos, e in enumerate(edges):
            if e not in g.edges:
                problems.append(f"walk uses missing edge {e}")
            if pos % 2 == 0 and e in m_edges:
                problems.append(f"edge {e} at even position lies in the matching")
            if pos % 2 == 1 and e not in m_edges:
                problems.append(f"edge {e} at odd position is not a matching edge")
        interiors.append(set(walk[1:-1]))
    for a in range(len(interiors)):
        for b in range(a + 1, len(interiors)):
            shared = interiors[a] & interiors[b]
            if shared:
                problems.append(f"walks {a} and {b} share interior {sorted(shared)}")
    if len(set(system.paths)) != len(system.paths):
        problems.append("duplicate walk")
    return problems


def alternating_path_system(g: BipartiteGraph, m: Matching, u: int, w: int,
                            k: int) -> AltPathSystem:
    """k internally disjoint alternating u-w paths with non-matching first
    and last edges; exists for every vertex pair whenever G is k-extendable.

    For a non-matching pair the paths are pullbacks of disjoint digraph
    paths between the two matching-edge vertices; for a matching pair they
    come from cycles meeting only at that edge's vertex, opened up.
    """
    if not (0 <= u < g.n and 0 <= w < g.n):
        raise ValueError("vertex index out of range")
    if not m.is_perfect or m.host != g:
        raise ValueError("need a perfect matching of the graph")
    if not is_k_extendable(g, k):
        raise ValueError(f"graph is not {k}-extendable")
    d, cmap = digraph_of(g, m)
    pairing = m.pairing()
    if pairing[u] == w:
        hub = cmap.vertex_of_matching_edge((u, w))
        cycles = cycles_through_vertex(d, hub, k)
        walks = []
        for cyc in cycles:
            walk = alternating_path_from_digraph_path(cmap, cyc)
            walks.append(walk)
        system = AltPathSystem(tuple(walks), m, u, w)
    else:
        s = cmap.vertex_of_matching_edge((u, pairing[u]))
        t_vertex = next(i for i, j in m.edges if j == w)
        t = cmap.vertex_of_matching_edge((t_vertex, w))
        paths = menger_paths(d, s, t, k)
        walks = tuple(alternating_path_from_digraph_path(cmap, p)
                      for p in paths.paths)
        system = AltPathSystem(walks, m, u, w)
    problems = check_alternating_path_system(g, system)
    if problems:
        raise AssertionError(f"invalid alternating path system: {problems}")
    return system


# ---------------------------------------------------------------------------
# elementary components versus strong components


@dataclass(frozen=True)
class ComponentPiece:
    kind: str  # "elementary" | "fixed_double"
    u_vertices: frozenset
    w_vertices: frozenset
    edges: frozenset
    matching_part: frozenset
    scc: frozenset  # the digraph strong component this piece stands for


@dataclass(frozen=True)
class ComponentMap:
    graph: BipartiteGraph
    matching: Matching
    digraph: Digraph
    pieces: tuple
    fixed_single_edges: frozenset

    @property
    def elementary(self) -> tuple:
        return tuple(p for p in self.pieces if p.kind == "elementary")

    @property
    def fixed_double_singletons(self) -> tuple:
        return tuple(p for p in self.pieces if p.kind == "fixed_double")


def elementary_components(g: BipartiteGraph, matching: Matching | None = None) -> ComponentMap:
    """Split G into elementary components (components of the non-fixed
    subgraph) plus one singleton piece per fixed double edge, and align the
    pieces one-to-one with the strong components of the derived digraph.

    The alignment and the fact that the matching restricts to a perfect
    matching of every piece are verified on the spot.
    """
    cls = classify_edges(g)
    if matching is None:
        matching = first_perfect_matching(g)
    if matching is None or not matching.is_perfect:
        raise ValueError("graph has no perfect matching")
    pairing = matching.pairing()

    # components of the subgraph formed by the non-fixed edges
    adj: dict[tuple, list] = {}
    for i, j in sorted(cls.nonfixed):
        adj.setdefault(("u", i), []).append(("w", j))
        adj.setdefault(("w", j), []).append(("u", i))
    seen = set()
    pieces = []
    for start in sorted(adj):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for nb in adj[v]:
                if nb not in comp:
                    comp.add(nb)
                    stack.append(nb)
        seen |= comp
        us = frozenset(v[1] for v in comp if v[0] == "u")
        ws = frozenset(v[1] for v in comp if v[0] == "w")
        edges = frozenset(e for e in g.edges if e[0] in us and e[1] in ws
                          and e in cls.nonfixed)
        mpart = frozenset((i, pairing[i]) for i in us if pairing[i] in ws)
        pieces.append(ComponentPiece("elementary", us, ws, edges, mpart,
                                     frozenset()))
    for i, j in sorted(cls.fixed_double):
        pieces.append(ComponentPiece("fixed_double", frozenset({i}), frozenset({j}),
                                     frozenset({(i, j)}), frozenset({(i, j)}),
                                     frozenset()))

    # every piece must pick up its vertices' matching edges in full
    for p in pieces:
        if frozenset(e[0] for e in p.matching_part) != p.u_vertices or \
                frozenset(e[1] for e in p.matching_part) != p.w_vertices:
            raise AssertionError("matching does not restrict to a perfect "
                                 "matching of a piece")

    d, cmap = digraph_of(g, matching)
    sccs = strong_components(d)
    scc_sets = {frozenset(c) for c in sccs}
    aligned = []
    used = set()
    for p in pieces:
        vertex_set = frozenset(cmap.vertex_of_matching_edge(e)
                               for e in p.matching_part)
        if vertex_set not in scc_sets:
            raise AssertionError(f"piece {sorted(vertex_set)} is not a strong component")
        if vertex_set in used:
            raise AssertionError("two pieces map to one strong component")
        used.add(vertex_set)
        aligned.append(ComponentPiece(p.kind, p.u_vertices, p.w_vertices,
                                      p.edges, p.matching_part, vertex_set))
    if used != scc_sets:
        raise AssertionError("some strong component has no piece")
    aligned.sort(key=lambda p: min(p.scc))
    return ComponentMap(g, matching, d, tuple(aligned), cls.fixed_single)


# ---------------------------------------------------------------------------
# degree audits for minimal k-extendable graphs


@dataclass(frozen=True)
class BipartiteDegreeAuditReport:
    ok: bool
    k: int
    degree_k_plus_1_total: int
    degree_k_plus_1_u: int
    degree_k_plus_1_w: int


def minimal_k_extendable_degree_audit(g: BipartiteGraph, k: int) -> BipartiteDegreeAuditReport:
    """A minimal k-extendable graph carries at least 2k+2 vertices of degree
    k+1, at least k+1 of them in each colour class."""
    verdict = is_minimal_k_extendable(g, k)
    if not verdict.holds:
        raise ValueError(f"graph is not minimal {k}-extendable: {verdict.reason}")
    u_count = sum(1 for i in range(g.n) if g.degree_u(i) == k + 1)
    w_count = sum(1 for j in range(g.n) if g.degree_w(j) == k + 1)
    total = u_count + w_count
    ok = total >= 2 * k + 2 and u_count >= k + 1 and w_count >= k + 1
    return BipartiteDegreeAuditReport(ok, k, total, u_count, w_count)


@dataclass(frozen=True)
class ForestCheckReport:
    ok: bool
    k: int
    qualifying_edges: frozenset
    cycle_edges: tuple | None
    digraph_trail: tuple | None  # pullback cross-check, expected absent


def high_degree_subgraph_forest_check(g: BipartiteGraph, k: int) -> ForestCheckReport:
    """In a minimal k-extendable graph, the edges whose two endpoints both
    have degree at least k+2 must induce a forest.

    Cross-check through the correspondence: an anti-directed trail among
    the high-degree arcs of the derived digraph would pull back to a closed
    trail inside the qualifying edges, so a passing forest check forces the
    digraph-side search to come up empty as well.
    """
    verdict = is_minimal_k_extendable(g, k)
    if not verdict.holds:
        raise ValueError(f"graph is not minimal {k}-extendable: {verdict.reason}")
    qual = frozenset((i, j) for i, j in g.edges
                     if g.degree_u(i) >= k + 2 and g.degree_w(j) >= k + 2)
    cycle = _find_cycle_bipartite(qual)

    m = first_perfect_matching(g)
    d, cmap = digraph_of(g, m)
    trail = anti_directed_trail_find(d, k)
    if cycle is None and trail is not None:
        raise AssertionError("digraph search found a trail the forest check missed")
    return ForestCheckReport(cycle is None, k, qual, cycle, trail)


def _find_cycle_bipartite(edges):
    """A cycle in the subgraph spanned by the given edges, or None."""
    leader = {}

    def find(x):
        while leader[x] != x:
            leader[x] = leader[leader[x]]
            x = leader[x]
        return x

    forest: dict[tuple, list] = {}
    for i, j in sorted(edges):
        a, b = ("u", i), ("w", j)
        leader.setdefault(a, a)
        leader.setdefault(b, b)
        if find(a) == find(b):
            from collections import deque

            parent = {a: None}
            queue = deque([a])
            while queue and b not in parent:
                x = queue.popleft()
                for y in forest.get(x, ()):
                    if y not in parent:
                        parent[y] = x
                        queue.append(y)
            nodes = [b]
            while parent[nodes[-1]] is not None:
                nodes.append(parent[nodes[-1]])
            nodes.reverse()
            closed = nodes + [nodes[0]]
            return tuple((x[1], y[1]) if x[0] == "u" else (y[1], x[1])
                         for x, y in zip(closed, closed[1:]))
        leader[find(a)] = find(b)
        forest.setdefault(a, []).append(b)
        forest.setdefault(b, []).append(a)
    return None
