"""Core types: balanced bipartite graphs, matchings, digraphs, 0-1 matrices.

Vertices are index-identified.  A bipartite graph has colour classes
U = {0..n-1} and W = {0..n-1}; an edge ``(i, j)`` joins u_i to w_j, so
intra-class edges are unrepresentable by construction.  Labels such as
``u3``/``w1`` (1-based) appear only in file formats and rendered output.

All types are immutable after construction; nothing here mutates shared
state, so concurrent readers are always safe.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator


class ExtendixError(Exception):
    """Base class for errors raised by this package."""


class InvalidInstanceError(ExtendixError):
    """An instance failed validation; carries the full report."""

    def __init__(self, report: "ValidationReport", message: str = ""):
        self.report = report
        super().__init__(message or str(report))


class TooLargeError(ExtendixError):
    """An exhaustive operation was asked to run beyond its guard."""


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    violations: tuple[str, ...] = ()

    def __str__(self) -> str:
        return "valid" if self.valid else "; ".join(self.violations)


# ---------------------------------------------------------------------------
# labels


def u_label(i: int) -> str:
    return f"u{i + 1}"


def w_label(j: int) -> str:
    return f"w{j + 1}"


def parse_vertex_label(text: str) -> tuple[str, int] | None:
    """Parse ``u3``/``w1`` into (side, 0-based index); None if malformed."""
    if len(text) >= 2 and text[0] in "uw" and text[1:].isdigit():
        k = int(text[1:])
        if k >= 1:
            return text[0], k - 1
    return None


# ---------------------------------------------------------------------------
# types


@dataclass(frozen=True)
class BipartiteGraph:
    """A balanced bipartite graph on U = W = {0..n-1}.

    ``edges`` holds pairs ``(i, j)`` meaning u_i -- w_j.
    """

    n: int
    edges: frozenset

    @classmethod
    def build(cls, n: int, edges: Iterable[tuple[int, int]]) -> "BipartiteGraph":
        """Construct and validate; raises InvalidInstanceError on violations."""
        g = cls(n, frozenset(edges))
        report = validate(g)
        if not report.valid:
            raise InvalidInstanceError(report)
        return g

    @property
    def m(self) -> int:
        return len(self.edges)

    def u_neighbors(self, i: int) -> tuple[int, ...]:
        return _u_adj(self)[i]

    def w_neighbors(self, j: int) -> tuple[int, ...]:
        return _w_adj(self)[j]

    def degree_u(self, i: int) -> int:
        return len(_u_adj(self)[i])

    def degree_w(self, j: int) -> int:
        return len(_w_adj(self)[j])

    def has_edge(self, i: int, j: int) -> bool:
        return (i, j) in self.edges

    def without_edge(self, edge: tuple[int, int]) -> "BipartiteGraph":
        return BipartiteGraph(self.n, self.edges - {tuple(edge)})

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __repr__(self) -> str:
        return f"BipartiteGraph(n={self.n}, edges={self.sorted_edges()})"


@dataclass(frozen=True)
class Matching:
    """An edge subset of a host graph in which no two edges share an endpoint."""

    edges: frozenset
    host: BipartiteGraph

    def __post_init__(self):
        us = [e[0] for e in self.edges]
        ws = [e[1] for e in self.edges]
        if len(set(us)) != len(us) or len(set(ws)) != len(ws):
            raise ValueError("matching edges share an endpoint")
        stray = self.edges - self.host.edges
        if stray:
            raise ValueError(f"edges not in host graph: {sorted(stray)}")

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def is_perfect(self) -> bool:
        return len(self.edges) == self.host.n

    def pairing(self) -> dict[int, int]:
        """u index -> matched w index."""
        return {i: j for i, j in self.edges}

    def covers_u(self, i: int) -> bool:
        return any(e[0] == i for e in self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __repr__(self) -> str:
        return f"Matching({self.sorted_edges()})"


@dataclass(frozen=True)
class Digraph:
    """A digraph on {0..n-1}.  Loops are representable but only when
    ``loops_allowed``; every connectivity computation ignores them."""

    n: int
    arcs: frozenset
    loops_allowed: bool = False

    @classmethod
    def build(cls, n: int, arcs: Iterable[tuple[int, int]],
              loops_allowed: bool = False) -> "Digraph":
        d = cls(n, frozenset(arcs), loops_allowed)
        report = validate(d)
        if not report.valid:
            raise InvalidInstanceError(report)
        return d

    @property
    def m(self) -> int:
        return len(self.arcs)

    def has_loops(self) -> bool:
        return any(a == b for a, b in self.arcs)

    def loop_free(self) -> "Digraph":
        return Digraph(self.n, frozenset((a, b) for a, b in self.arcs if a != b))

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return _out_adj(self)[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return _in_adj(self)[v]

    def out_degree(self, v: int) -> int:
        """Out-degree, loops not counted."""
        return len(_out_adj(self)[v])

    def in_degree(self, v: int) -> int:
        return len(_in_adj(self)[v])

    def without_arc(self, arc: tuple[int, int]) -> "Digraph":
        return Digraph(self.n, self.arcs - {tuple(arc)}, self.loops_allowed)

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.sorted_arcs()})"


@dataclass(frozen=True)
class ZeroOneMatrix:
    """A square matrix over {0,1}, stored as a tuple of row tuples."""

    rows: tuple

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "ZeroOneMatrix":
        m = cls(tuple(tuple(int(x) for x in row) for row in rows))
        report = validate(m)
        if not report.valid:
            raise InvalidInstanceError(report)
        return m

    @classmethod
    def from_array(cls, array) -> "ZeroOneMatrix":
        """Build from anything numpy can coerce to a 2-d integer array."""
        import numpy as np

        a = np.asarray(array)
        return cls.from_rows(a.tolist())

    @classmethod
    def identity(cls, n: int) -> "ZeroOneMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def ones(cls, n: int) -> "ZeroOneMatrix":
        return cls(tuple((1,) * n for _ in range(n)))

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        return self.rows[i][j]

    def to_array(self):
        import numpy as np

        return np.array([list(r) for r in self.rows], dtype=int)

    def __repr__(self) -> str:
        return f"ZeroOneMatrix({list(list(r) for r in self.rows)})"


# ---------------------------------------------------------------------------
# cached adjacency (the types are hashable, so plain lru_cache works)


@lru_cache(maxsize=16384)
def _u_adj(g: BipartiteGraph) -> tuple:
    adj = [[] for _ in range(g.n)]
    for i, j in sorted(g.edges):
        adj[i].append(j)
    return tuple(tuple(a) for a in adj)


@lru_cache(maxsize=16384)
def _w_adj(g: BipartiteGraph) -> tuple:
    adj = [[] for _ in range(g.n)]
    for i, j in sorted(g.edges):
        adj[j].append(i)
    return tuple(tuple(a) for a in adj)


@lru_cache(maxsize=16384)
def _out_adj(d: Digraph) -> tuple:
    adj = [[] for _ in range(d.n)]
    for a, b in sorted(d.arcs):
        if a != b:
            adj[a].append(b)
    return tuple(tuple(x) for x in adj)


@lru_cache(maxsize=16384)
def _in_adj(d: Digraph) -> tuple:
    adj = [[] for _ in range(d.n)]
    for a, b in sorted(d.arcs):
        if a != b:
            adj[b].append(a)
    return tuple(tuple(x) for x in adj)


# ---------------------------------------------------------------------------
# validation


def _validate_pair_list(pairs, n: int, kind: str) -> list[str]:
    """Shared edge/arc checks.  Accepts index pairs and label pairs so that
    malformed raw input (duplicates, intra-class edges) can be reported
    instead of rejected at construction time."""
    problems = []
    seen = set()
    for item in pairs:
        try:
            a, b = item
        except (TypeError, ValueError):
            problems.append(f"not a pair: {item!r}")
            continue
        if isinstance(a, str) or isinstance(b, str):
            pa, pb = parse_vertex_label(str(a)), parse_vertex_label(str(b))
            if pa is None or pb is None:
                problems.append(f"malformed vertex label in {item!r}")
                continue
            if kind == "bg":
                if pa[0] == pb[0]:
                    problems.append(f"intra-class edge {a}-{b}")
                    continue
                if pa[0] == "w":
                    pa, pb = pb, pa
            a, b = pa[1], pb[1]
        if not (isinstance(a, int) and isinstance(b, int)):
            problems.append(f"non-integer endpoints in {item!r}")
            continue
        if not (0 <= a < n and 0 <= b < n):
            problems.append(f"index out of range in {(a, b)!r} (n={n})")
            continue
        if (a, b) in seen:
            problems.append(f"duplicate {'edge' if kind == 'bg' else 'arc'} {(a, b)!r}")
        seen.add((a, b))
    return problems


def validate(obj) -> ValidationReport:
    """Report every violated invariant of a graph, digraph or matrix.

    Total: never raises, reports instead.  Edges/arcs may be given either
    as 0-based index pairs or as 1-based labels like ``("u1", "w2")``.
    """
    problems: list[str] = []
    if isinstance(obj, BipartiteGraph):
        if not isinstance(obj.n, int) or obj.n < 1:
            problems.append(f"n must be a positive integer, got {obj.n!r}")
        else:
            problems.extend(_validate_pair_list(obj.edges, obj.n, "bg"))
    elif isinstance(obj, Digraph):
        if not isinstance(obj.n, int) or obj.n < 1:
            problems.append(f"n must be a positive integer, got {obj.n!r}")
        else:
            problems.extend(_validate_pair_list(obj.arcs, obj.n, "dg"))
            if not obj.loops_allowed:
                loops = sorted((a, b) for a, b in obj.arcs
                               if isinstance(a, int) and a == b)
                problems.extend(f"loop {arc!r} present but loops not allowed"
                                for arc in loops)
    elif isinstance(obj, ZeroOneMatrix):
        rows = obj.rows
        if len(rows) < 1:
            problems.append("matrix must have order at least 1")
        widths = {len(r) for r in rows}
        if widths and widths != {len(rows)}:
            problems.append(f"matrix not square: {len(rows)} rows, widths {sorted(widths)}")
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                if x not in (0, 1):
                    problems.append(f"non-binary entry {x!r} at ({i + 1},{j + 1})")
    else:
        problems.append(f"unsupported instance type {type(obj).__name__}")
    return ValidationReport(valid=not problems, violations=tuple(problems))


# ---------------------------------------------------------------------------
# small factories


def complete_bipartite(n: int) -> BipartiteGraph:
    return BipartiteGraph(n, frozenset((i, j) for i in range(n) for j in range(n)))


def cycle_bipartite(n: int) -> BipartiteGraph:
    """The even cycle on 2n vertices: edges u_i w_i and u_i w_{i+1 mod n}."""
    if n < 2:
        raise ValueError("a bipartite cycle needs n >= 2")
    edges = {(i, i) for i in range(n)} | {(i, (i + 1) % n) for i in range(n)}
    return BipartiteGraph(n, frozenset(edges))


def matching_graph(n: int) -> BipartiteGraph:
    """n disjoint edges u_i w_i."""
    return BipartiteGraph(n, frozenset((i, i) for i in range(n)))


def directed_cycle(n: int) -> Digraph:
    if n < 2:
        raise ValueError("a directed cycle needs n >= 2")
    return Digraph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def complete_digraph(n: int) -> Digraph:
    return Digraph(n, frozenset((i, j) for i in range(n) for j in range(n) if i != j))


def canonical_matching(g: BipartiteGraph) -> Matching:
    """The matching {u_i w_i}; raises if some diagonal edge is missing."""
    edges = frozenset((i, i) for i in range(g.n))
    if not edges <= g.edges:
        missing = sorted(e for e in edges if e not in g.edges)
        raise ValueError(f"canonical matching edges missing: {missing}")
    return Matching(edges, g)


def connected(g: BipartiteGraph) -> bool:
    """Connectivity of the underlying graph on the 2n tagged vertices."""
    if g.n == 0:
        return True
    seen_u, seen_w = {0}, set()
    stack = [("u", 0)]
    while stack:
        side, v = stack.pop()
        if side == "u":
            for j in g.u_neighbors(v):
                if j not in seen_w:
                    seen_w.add(j)
                    stack.append(("w", j))
        else:
            for i in g.w_neighbors(v):
                if i not in seen_u:
                    seen_u.add(i)
                    stack.append(("u", i))
    return len(seen_u) == g.n and len(seen_w) == g.n


# ---------------------------------------------------------------------------
# random generators (deterministic for a fixed seed)


def random_bipartite_with_pm(n: int, edge_probability: float, seed) -> BipartiteGraph:
    """The canonical matching plus each off-diagonal edge independently
    with the given probability."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if not 0.0 <= edge_probability <= 1.0:
        raise ValueError("edge_probability must lie in [0, 1]")
    rng = random.Random(seed)
    edges = {(i, i) for i in range(n)}
    for i in range(n):
        for j in range(n):
            if i != j and rng.random() < edge_probability:
                edges.add((i, j))
    return BipartiteGraph(n, frozenset(edges))


def random_digraph(n: int, arc_probability: float, seed) -> Digraph:
    """Each ordered pair (i, j), i != j, becomes an arc independently;
    no loops are generated."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if not 0.0 <= arc_probability <= 1.0:
        raise ValueError("arc_probability must lie in [0, 1]")
    rng = random.Random(seed)
    arcs = set()
    for i in range(n):
        for j in range(n):
            if i != j and rng.random() < arc_probability:
                arcs.add((i, j))
    return Digraph(n, frozenset(arcs))


# ---------------------------------------------------------------------------
# exhaustive enumerators (oracle support; 2^(n^2-n) instances each)


def _off_diagonal_cells(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(n) if i != j]


def iter_bipartite_with_canonical(n: int) -> Iterator[BipartiteGraph]:
    """All bipartite graphs on U, W of size n that contain {u_i w_i}."""
    cells = _off_diagonal_cells(n)
    diag = frozenset((i, i) for i in range(n))
    for mask in range(1 << len(cells)):
        extra = frozenset(cells[b] for b in range(len(cells)) if mask >> b & 1)
        yield BipartiteGraph(n, diag | extra)


def iter_digraphs(n: int) -> Iterator[Digraph]:
    """All loop-free digraphs on {0..n-1}."""
    cells = _off_diagonal_cells(n)
    for mask in range(1 << len(cells)):
        arcs = frozenset(cells[b] for b in range(len(cells)) if mask >> b & 1)
        yield Digraph(n, arcs)


def iter_matrices(n: int) -> Iterator[ZeroOneMatrix]:
    """All 2^(n^2) matrices of order n over {0,1}."""
    cells = [(i, j) for i in range(n) for j in range(n)]
    for mask in range(1 << len(cells)):
        rows = [[0] * n for _ in range(n)]
        for b, (i, j) in enumerate(cells):
            if mask >> b & 1:
                rows[i][j] = 1
        yield ZeroOneMatrix(tuple(tuple(r) for r in rows))
