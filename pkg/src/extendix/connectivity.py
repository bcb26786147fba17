"""Digraph connectivity: strong components, k-strong tests, disjoint path
systems, ear decompositions, minimality and degree audits.

Loops never influence anything here; every computation works on the
loop-free view of its input.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from heapq import heappop, heappush

from .core import Digraph, ExtendixError, TooLargeError


class InsufficientPathsError(ExtendixError):
    """Fewer disjoint paths exist than requested; carries the best
    achievable count and a cut witness."""

    def __init__(self, requested: int, achievable: int, cut: tuple):
        self.requested = requested
        self.achievable = achievable
        self.cut = cut
        super().__init__(
            f"only {achievable} of {requested} requested disjoint paths exist; "
            f"cut witness {list(cut)}")


# ---------------------------------------------------------------------------
# strong components


def strong_components(d: Digraph) -> tuple:
    """Partition of V(D) into strong components, ordered topologically in
    the condensation; ties broken by smallest contained vertex."""
    n = d.n
    comp_of = [-1] * n
    comps: list[frozenset] = []

    # iterative Tarjan
    index_of = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    counter = 0
    for root in range(n):
        if index_of[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index_of[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            recurse = False
            outs = d.out_neighbors(v)
            for k in range(pi, len(outs)):
                w = outs[k]
                if index_of[w] == -1:
                    work[-1] = (v, k + 1)
                    work.append((w, 0))
                    recurse = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index_of[w])
            if recurse:
                continue
            if low[v] == index_of[v]:
                comp = set()
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.add(w)
                    comp_of[w] = len(comps)
                    if w == v:
                        break
                comps.append(frozenset(comp))
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])

    # deterministic condensation order: Kahn with a min-vertex heap
    k = len(comps)
    succ = [set() for _ in range(k)]
    indeg = [0] * k
    for a, b in d.arcs:
        if a != b and comp_of[a] != comp_of[b]:
            if comp_of[b] not in succ[comp_of[a]]:
                succ[comp_of[a]].add(comp_of[b])
                indeg[comp_of[b]] += 1
    heap = [(min(comps[c]), c) for c in range(k) if indeg[c] == 0]
    heap.sort()
    ordered = []
    while heap:
        _, c = heappop(heap)
        ordered.append(comps[c])
        for nc in succ[c]:
            indeg[nc] -= 1
            if indeg[nc] == 0:
                heappush(heap, (min(comps[nc]), nc))
    return tuple(ordered)


def is_strong(d: Digraph) -> bool:
    """True iff D has exactly one strong component (single vertex counts)."""
    if d.n == 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in d.out_neighbors(v):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != d.n:
        return False
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in d.in_neighbors(v):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == d.n


# ---------------------------------------------------------------------------
# unit-capacity flow with vertex splitting
#
# node 2v is "into v", node 2v+1 is "out of v"; the split arc carries the
# vertex capacity.  Ordinary arcs are uncapped so that minimum cuts consist
# of split arcs (= vertices) only; a direct source->sink arc is capped at 1
# because the direct path counts exactly once among internally disjoint
# paths.  Every ordinary arc still carries at most one unit since its head
# split is capped.


_BIG = 1 << 20


def _residual(d: Digraph, direct=None) -> dict:
    res: dict[int, dict[int, int]] = {}

    def add(x, y, cap):
        res.setdefault(x, {})[y] = cap
        res.setdefault(y, {}).setdefault(x, 0)

    for v in range(d.n):
        add(2 * v, 2 * v + 1, 1)
    for a, b in sorted(d.arcs):
        if a != b:
            add(2 * a + 1, 2 * b, 1 if (a, b) == direct else _BIG)
    return res


def _augment_once(res: dict, s: int, t: int) -> bool:
    parent = {s: None}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        if x == t:
            break
        for y in sorted(res.get(x, ())):
            if res[x][y] > 0 and y not in parent:
                parent[y] = x
                queue.append(y)
    if t not in parent:
        return False
    y = t
    while parent[y] is not None:
        x = parent[y]
        res[x][y] -= 1
        res[y][x] += 1
        y = x
    return True


def _max_flow(res: dict, s: int, t: int, limit: int) -> int:
    value = 0
    while value < limit and _augment_once(res, s, t):
        value += 1
    return value


def _reachable(res: dict, s: int) -> set:
    seen = {s}
    stack = [s]
    while stack:
        x = stack.pop()
        for y, cap in res.get(x, {}).items():
            if cap > 0 and y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def _cut_vertices(res: dict, d: Digraph, s: int) -> tuple:
    reach = _reachable(res, 2 * s + 1)
    return tuple(v for v in range(d.n) if 2 * v in reach and 2 * v + 1 not in reach)


def _disjoint_path_count(d: Digraph, s: int, t: int, limit: int):
    """(value, residual): max internally disjoint s->t paths, capped."""
    res = _residual(d, direct=(s, t))
    value = _max_flow(res, 2 * s + 1, 2 * t, limit)
    return value, res


def _used_arcs(res: dict, d: Digraph) -> dict:
    """Arcs carrying net flow, read off the reverse residual capacities."""
    used: dict[int, list] = {}
    for a, b in d.arcs:
        if a != b and res[2 * b].get(2 * a + 1, 0) > 0:
            used.setdefault(a, []).append(b)
    for v in used:
        used[v].sort()
    return used


def _paths_from_flow(res: dict, d: Digraph, s: int, t: int) -> list:
    used = _used_arcs(res, d)
    paths = []
    while used.get(s):
        path = [s]
        here = s
        while here != t:
            here = used[here].pop(0)
            path.append(here)
        paths.append(tuple(path))
    return paths


# ---------------------------------------------------------------------------
# k-strong connectivity


def vertex_connectivity(d: Digraph) -> int:
    """The largest k for which D is k-strong: at least k+1 vertices and no
    separator of order below k.  A complete digraph has connectivity n-1
    because no separator exists and the vertex-count clause caps k."""
    n = d.n
    if n == 1 or not is_strong(d):
        return 0
    best = n - 1
    for s in range(n):
        for t in range(n):
            if s == t:
                continue
            value, _ = _disjoint_path_count(d, s, t, best)
            if value < best:
                best = value
                if best == 0:
                    return 0
    return best


@dataclass(frozen=True)
class KStrongResult:
    holds: bool
    separator: tuple | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.holds


def is_k_strong(d: Digraph, k: int) -> KStrongResult:
    """Decide k-strong connectivity; on failure carry a separator of order
    below k (or the vertex-count obstruction).

    A violating pair joined by a direct arc yields a cut containing that
    arc rather than a vertex separator, but whenever the digraph is not
    k-strong some non-adjacent pair is violating too, so the scan keeps
    going until the cut is purely made of vertices.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if d.n < k + 1:
        return KStrongResult(False, None, f"needs at least {k + 1} vertices, has {d.n}")
    impure = None
    for s in range(d.n):
        for t in range(d.n):
            if s == t:
                continue
            value, res = _disjoint_path_count(d, s, t, k)
            if value < k:
                sep = _cut_vertices(res, d, s)
                if len(sep) == value:
                    return KStrongResult(False, sep,
                                         f"only {value} disjoint paths from {s} to {t}")
                impure = (s, t, value)
    if impure is None:
        return KStrongResult(True)
    raise AssertionError(f"no vertex separator recovered although pair {impure} violates")


# ---------------------------------------------------------------------------
# path systems


@dataclass(frozen=True)
class PathSystem:
    """Directed paths, either internally disjoint with shared endpoints or
    fully vertex-disjoint between sources and sinks."""

    paths: tuple
    mode: str  # "internally_disjoint_same_endpoints" | "independent_multi_endpoint"
    sources: tuple
    sinks: tuple


def check_path_system(d: Digraph, system: PathSystem) -> list[str]:
    """Structural verification; returns a list of problems (empty = valid)."""
    problems = []
    for path in system.paths:
        for x, y in zip(path, path[1:]):
            if (x, y) not in d.arcs:
                problems.append(f"missing arc {(x, y)} in path {path}")
        if len(set(path)) != len(path):
            problems.append(f"repeated vertex in path {path}")
    if system.mode == "internally_disjoint_same_endpoints":
        s, t = system.sources[0], system.sinks[0]
        interior = []
        for path in system.paths:
            if path[0] != s or path[-1] != t:
                problems.append(f"path {path} does not run {s} -> {t}")
            interior.append(set(path[1:-1]))
        for a in range(len(interior)):
            for b in range(a + 1, len(interior)):
                shared = interior[a] & interior[b]
                if shared:
                    problems.append(f"paths {a} and {b} share interior {sorted(shared)}")
        if len(set(system.paths)) != len(system.paths):
            problems.append("duplicate path")
    else:
        used_sources, used_sinks, all_vertices = [], [], set()
        for path in system.paths:
            used_sources.append(path[0])
            used_sinks.append(path[-1])
            overlap = all_vertices & set(path)
            if overlap:
                problems.append(f"paths share vertices {sorted(overlap)}")
            all_vertices |= set(path)
        if sorted(used_sources) != sorted(system.sources):
            problems.append("sources not used exactly once each")
        if sorted(used_sinks) != sorted(system.sinks):
            problems.append("sinks not used exactly once each")
    return problems


def menger_paths(d: Digraph, s: int, t: int, k: int) -> PathSystem:
    """k internally vertex-disjoint s->t paths.

    Exists whenever D is k-strong; raises InsufficientPathsError with the
    achievable count and a cut witness otherwise.
    """
    if s == t:
        raise ValueError("endpoints must be distinct")
    if not (0 <= s < d.n and 0 <= t < d.n):
        raise ValueError("endpoint out of range")
    if k < 1:
        raise ValueError("k must be at least 1")
    value, res = _disjoint_path_count(d, s, t, k)
    if value < k:
        raise InsufficientPathsError(k, value, _cut_vertices(res, d, s))
    system = PathSystem(tuple(_paths_from_flow(res, d, s, t)),
                        "internally_disjoint_same_endpoints", (s,), (t,))
    problems = check_path_system(d, system)
    if problems:
        raise AssertionError(f"invalid path system produced: {problems}")
    return system


def independent_path_system(d: Digraph, sources, sinks) -> PathSystem:
    """k vertex-disjoint paths, each from one source to one sink, every
    source and sink used exactly once.  Exists whenever D is k-strong and
    the 2k endpoints are distinct."""
    sources, sinks = tuple(sources), tuple(sinks)
    k = len(sources)
    if k == 0 or len(sinks) != k:
        raise ValueError("need equally many sources and sinks, at least one each")
    endpoints = sources + sinks
    if len(set(endpoints)) != 2 * k:
        raise ValueError("sources and sinks must be 2k distinct vertices")
    if not all(0 <= v < d.n for v in endpoints):
        raise ValueError("endpoint out of range")

    res = _residual(d)
    super_s, super_t = 2 * d.n, 2 * d.n + 1
    for x in sources:
        res.setdefault(super_s, {})[2 * x] = 1
        res.setdefault(2 * x, {}).setdefault(super_s, 0)
    for y in sinks:
        res.setdefault(2 * y + 1, {})[super_t] = 1
        res.setdefault(super_t, {}).setdefault(2 * y + 1, 0)
    value = _max_flow(res, super_s, super_t, k)
    if value < k:
        reach = _reachable(res, super_s)
        blockers = tuple(v for v in range(d.n)
                         if 2 * v in reach and 2 * v + 1 not in reach)
        raise InsufficientPathsError(k, value, blockers)

    used = _used_arcs(res, d)
    # every vertex carries at most one flow unit, so each walk is forced;
    # it ends where the flow exits to the super sink
    paths = []
    for start in sorted(sources):
        path = [start]
        here = start
        while used.get(here):
            here = used[here].pop(0)
            path.append(here)
        paths.append(tuple(path))
    system = PathSystem(tuple(paths), "independent_multi_endpoint", sources, sinks)
    problems = check_path_system(d, system)
    if problems:
        raise AssertionError(f"invalid path system produced: {problems}")
    return system


def cycles_through_vertex(d: Digraph, x: int, k: int) -> tuple:
    """k cycles, any two of which intersect exactly in {x}.

    Construction: clone x into a fresh vertex that copies x's arcs, take k
    internally disjoint paths from x to the clone, fold the clone back.
    Requires D k-strong.
    """
    if not 0 <= x < d.n:
        raise ValueError("vertex out of range")
    verdict = is_k_strong(d, k)
    if not verdict.holds:
        raise ValueError(f"digraph is not {k}-strong: {verdict.reason}")
    clone = d.n
    arcs = set(a for a in d.arcs if a[0] != a[1])
    for u, v in d.arcs:
        if u == v:
            continue
        if v == x:
            arcs.add((u, clone))
        if u == x:
            arcs.add((clone, v))
    extended = Digraph(d.n + 1, frozenset(arcs))
    system = menger_paths(extended, x, clone, k)
    cycles = tuple(path[:-1] + (x,) for path in system.paths)
    for a in range(len(cycles)):
        for b in range(a + 1, len(cycles)):
            if set(cycles[a]) & set(cycles[b]) != {x}:
                raise AssertionError("cycles intersect outside the hub vertex")
    return cycles


# ---------------------------------------------------------------------------
# ear decomposition


@dataclass(frozen=True)
class EarDecompositionD:
    """Ears as vertex sequences; cycles are closed (first == last)."""

    ears: tuple

    @property
    def ear_count(self) -> int:
        return len(self.ears)

    def arcs(self) -> set:
        out = set()
        for ear in self.ears:
            out.update(zip(ear, ear[1:]))
        return out

    def vertices(self) -> set:
        out = set()
        for ear in self.ears:
            out.update(ear)
        return out


def check_ear_decomposition_digraph(d: Digraph, dec: EarDecompositionD) -> list[str]:
    """Verify arc-disjointness, the attachment rules, and exact coverage."""
    problems = []
    if not dec.ears:
        return ["empty decomposition"]
    first = dec.ears[0]
    if len(first) < 3 or first[0] != first[-1] or len(set(first[:-1])) != len(first) - 1:
        problems.append(f"initial ear {first} is not a cycle")
    seen_arcs: set = set()
    seen_vertices: set = set(first)
    for idx, ear in enumerate(dec.ears):
        arcs = list(zip(ear, ear[1:]))
        for arc in arcs:
            if arc not in d.arcs:
                problems.append(f"ear {idx} uses missing arc {arc}")
            if arc in seen_arcs:
                problems.append(f"ear {idx} repeats arc {arc}")
            seen_arcs.add(arc)
        if idx == 0:
            continue
        closed = ear[0] == ear[-1]
        interior = ear[1:-1]
        if closed:
            if ear[0] not in seen_vertices:
                problems.append(f"cycle ear {idx} attaches at a new vertex")
            overlap = set(interior) & seen_vertices
            if overlap:
                problems.append(f"cycle ear {idx} re-enters old vertices {sorted(overlap)}")
            if len(set(ear[:-1])) != len(ear) - 1:
                problems.append(f"cycle ear {idx} repeats a vertex")
        else:
            if ear[0] == ear[-1] or ear[0] not in seen_vertices or ear[-1] not in seen_vertices:
                problems.append(f"path ear {idx} endpoints must be distinct old vertices")
            overlap = set(interior) & seen_vertices
            if overlap:
                problems.append(f"path ear {idx} re-enters old vertices {sorted(overlap)}")
            if len(set(ear)) != len(ear):
                problems.append(f"path ear {idx} repeats a vertex")
        seen_vertices |= set(ear)
    if seen_vertices != set(range(d.n)):
        problems.append("vertices not fully covered")
    if seen_arcs != set(a for a in d.arcs if a[0] != a[1]):
        problems.append("arcs not exactly covered")
    return problems


def _shortest_cycle(d: Digraph) -> tuple | None:
    best = None
    for v in range(d.n):
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
        for x in d.in_neighbors(v):
            if x != v and x in dist:
                path = [x]
                while path[-1] != v:
                    path.append(parent[path[-1]])
                path.reverse()
                cand = tuple(path)
                if best is None or (len(cand), cand) < (len(best), best):
                    best = cand
    return best


def ear_decomposition_digraph(d: Digraph, start_cycle=None) -> EarDecompositionD:
    """Build an ear decomposition of a strong digraph; exists iff D is
    strong.  Any directed cycle may serve as the starting ear."""
    if d.has_loops():
        raise ValueError("ear decomposition requires a loop-free digraph")
    if d.n < 2:
        raise ValueError("ear decomposition needs at least two vertices")
    if not is_strong(d):
        raise ValueError("digraph is not strong")
    if start_cycle is None:
        start_cycle = _shortest_cycle(d)
    start_cycle = tuple(start_cycle)
    if len(start_cycle) >= 2 and start_cycle[0] == start_cycle[-1]:
        start_cycle = start_cycle[:-1]
    if len(set(start_cycle)) != len(start_cycle) or len(start_cycle) < 2:
        raise ValueError(f"{start_cycle} is not a simple cycle")
    closed = start_cycle + (start_cycle[0],)
    for arc in zip(closed, closed[1:]):
        if arc not in d.arcs:
            raise ValueError(f"start cycle uses missing arc {arc}")

    ears = [closed]
    covered = set(zip(closed, closed[1:]))
    members = set(start_cycle)
    all_arcs = set(d.arcs)
    while covered != all_arcs:
        candidates = sorted(a for a in all_arcs - covered if a[0] in members)
        u, v = candidates[0]
        if v in members:
            ear = (u, v)
        else:
            parent = {v: None}
            queue = deque([v])
            hit = None
            while queue and hit is None:
                x = queue.popleft()
                for y in d.out_neighbors(x):
                    if y in members:
                        hit = (x, y)
                        break
                    if y not in parent:
                        parent[y] = x
                        queue.append(y)
            tail = [hit[1], hit[0]]
            while parent[tail[-1]] is not None:
                tail.append(parent[tail[-1]])
            tail.reverse()
            ear = (u,) + tuple(tail)
        ears.append(ear)
        covered.update(zip(ear, ear[1:]))
        members.update(ear)
    dec = EarDecompositionD(tuple(ears))
    problems = check_ear_decomposition_digraph(d, dec)
    if problems:
        raise AssertionError(f"invalid ear decomposition produced: {problems}")
    return dec


# ---------------------------------------------------------------------------
# minimality


@dataclass(frozen=True)
class MinimalityResult:
    holds: bool
    witness: tuple | None = None  # a deletable arc/edge when not minimal
    reason: str = ""

    def __bool__(self) -> bool:
        return self.holds


def is_minimal_k_strong(d: Digraph, k: int) -> MinimalityResult:
    """k-strong, and every single-arc deletion destroys that."""
    if not is_k_strong(d, k).holds:
        return MinimalityResult(False, None, f"not {k}-strong")
    for arc in d.sorted_arcs():
        if arc[0] == arc[1]:
            continue
        if is_k_strong(d.without_arc(arc), k).holds:
            return MinimalityResult(False, arc, "arc is deletable")
    return MinimalityResult(True)


# ---------------------------------------------------------------------------
# one-way pairs


@dataclass(frozen=True)
class OneWayPair:
    """Disjoint nonempty X, Y with no arc from X to Y; h = |V - X - Y|."""

    x: tuple
    y: tuple
    h: int


def one_way_pair_audit(d: Digraph, k: int):
    """Exhaustively check h(X, Y) >= k over all one-way pairs.

    For k <= n-1 this is equivalent to k-strong connectivity.  Returns
    (True, None) or (False, violating pair).
    """
    n = d.n
    if n > 12:
        raise TooLargeError(f"one-way pair audit is exhaustive; n={n} exceeds the guard")
    arcs = [a for a in d.arcs if a[0] != a[1]]
    vertices = list(range(n))
    for xm in range(1, 1 << n):
        rest = [v for v in vertices if not xm >> v & 1]
        if not rest:
            continue
        for ym_bits in range(1, 1 << len(rest)):
            ym = 0
            for idx, v in enumerate(rest):
                if ym_bits >> idx & 1:
                    ym |= 1 << v
            if any(xm >> a & 1 and ym >> b & 1 for a, b in arcs):
                continue
            h = n - bin(xm).count("1") - bin(ym).count("1")
            if h < k:
                pair = OneWayPair(
                    tuple(v for v in vertices if xm >> v & 1),
                    tuple(v for v in vertices if ym >> v & 1),
                    h)
                return False, pair
    return True, None


# ---------------------------------------------------------------------------
# anti-directed trails


def is_anti_directed_trail(arcs_seq) -> bool:
    """Check the closed alternation pattern: an even sequence of distinct
    arcs pairing up alternately at heads and at tails, indices cyclic."""
    seq = [tuple(a) for a in arcs_seq]
    m = len(seq)
    if m < 2 or m % 2 != 0 or len(set(seq)) != m:
        return False

    def matches(head_first: bool) -> bool:
        for i in range(m):
            a, b = seq[i], seq[(i + 1) % m]
            share_head = (i % 2 == 0) == head_first
            if share_head:
                if a[1] != b[1]:
                    return False
            else:
                if a[0] != b[0]:
                    return False
        return True

    return matches(True) or matches(False)


def anti_directed_trail_find(d: Digraph, k: int):
    """Search the arcs whose tail has out-degree >= k+1 and whose head has
    in-degree >= k+1 for an anti-directed trail; None when there is none.

    Two arcs sharing a head (tail) are adjacent edges of an auxiliary
    bipartite graph on tail- and head-slots, so an anti-directed trail
    exists exactly when that auxiliary graph has a cycle.
    """
    qual = [(u, v) for u, v in sorted(d.arcs)
            if u != v and d.out_degree(u) >= k + 1 and d.in_degree(v) >= k + 1]
    edge_arc: dict[frozenset, tuple] = {}
    forest: dict[tuple, list] = {}
    leader: dict[tuple, tuple] = {}

    def find(x):
        while leader[x] != x:
            leader[x] = leader[leader[x]]
            x = leader[x]
        return x

    for u, v in qual:
        tn, hn = ("t", u), ("h", v)
        leader.setdefault(tn, tn)
        leader.setdefault(hn, hn)
        if find(tn) == find(hn):
            # this arc closes a cycle: recover the unique forest path tn..hn
            parent = {tn: None}
            queue = deque([tn])
            while queue and hn not in parent:
                x = queue.popleft()
                for y in forest.get(x, ()):
                    if y not in parent:
                        parent[y] = x
                        queue.append(y)
            nodes = [hn]
            while parent[nodes[-1]] is not None:
                nodes.append(parent[nodes[-1]])
            nodes.reverse()  # tn ... hn
            arcs_seq = [edge_arc[frozenset(pair)] for pair in zip(nodes, nodes[1:])]
            arcs_seq.append((u, v))
            if not is_anti_directed_trail(arcs_seq):
                raise AssertionError("auxiliary cycle is not an anti-directed trail")
            return tuple(arcs_seq)
        leader[find(tn)] = find(hn)
        forest.setdefault(tn, []).append(hn)
        forest.setdefault(hn, []).append(tn)
        edge_arc[frozenset((tn, hn))] = (u, v)
    return None


# ---------------------------------------------------------------------------
# degree audit for minimal k-strong digraphs


@dataclass(frozen=True)
class DegreeAuditReport:
    ok: bool
    k: int
    out_degree_k_count: int
    in_degree_k_count: int


def minimal_k_strong_degree_audit(d: Digraph, k: int) -> DegreeAuditReport:
    """In a minimal k-strong digraph, count the vertices of out-degree
    exactly k and of in-degree exactly k; both counts must reach k."""
    verdict = is_minimal_k_strong(d, k)
    if not verdict.holds:
        raise ValueError(f"digraph is not minimal {k}-strong: {verdict.reason}")
    out_count = sum(1 for v in range(d.n) if d.out_degree(v) == k)
    in_count = sum(1 for v in range(d.n) if d.in_degree(v) == k)
    return DegreeAuditReport(out_count >= k and in_count >= k, k, out_count, in_count)
