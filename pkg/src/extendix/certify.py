"""Building and re-checking certificates for the four claim kinds.

A positive certificate carries path systems (alternating ones on the
bipartite side, vertex-disjoint ones on the digraph side) or a perfect
matching for the k = 0 boundary; a negative certificate carries a
separator, a non-extendable matching, a deficient vertex set, or a zero
block.  ``check_certificate`` re-derives the verdict from the embedded
instance and re-validates the witness structurally, so it is independent
of however the certificate was produced.
"""

from __future__ import annotations

import random

from .core import (BipartiteGraph, Digraph, Matching, ZeroOneMatrix,
                   connected, u_label, w_label)
from .correspond import bipartite_of_matrix, digraph_of_matrix
from .connectivity import is_k_strong, is_strong, menger_paths, check_path_system, PathSystem
from .extendability import (AltPathSystem, alternating_path_system,
                            check_alternating_path_system, is_k_extendable,
                            is_k_extendable_oracle, is_k_extendable_via_neighborhood)
from .fileio import Certificate
from .matching import (first_perfect_matching, has_perfect_matching,
                       matching_extends)
from .matrixlab import is_k_partly_decomposable, is_k_reducible


def _sample_pairs(n: int, seed, cap: int = 6) -> list:
    pairs = [(u, w) for u in range(n) for w in range(n)]
    if len(pairs) <= cap:
        return pairs
    rng = random.Random(seed)
    return sorted(rng.sample(pairs, cap))


def _sample_ordered(n: int, seed, cap: int = 6) -> list:
    pairs = [(s, t) for s in range(n) for t in range(n) if s != t]
    if len(pairs) <= cap:
        return pairs
    rng = random.Random(seed)
    return sorted(rng.sample(pairs, cap))


def _walk_text(walk) -> str:
    return " ".join((u_label(v) if side == "u" else w_label(v)) for side, v in walk)


def _parse_walk(text: str) -> tuple:
    from .core import parse_vertex_label

    out = []
    for token in text.split():
        parsed = parse_vertex_label(token)
        if parsed is None:
            raise ValueError(f"bad walk vertex {token!r}")
        out.append(parsed)
    return tuple(out)


# ---------------------------------------------------------------------------
# building


def _alt_system_lines(g: BipartiteGraph, m: Matching, k: int, seed) -> list[str]:
    lines = ["matching: " + " ".join(f"{i + 1}-{j + 1}" for i, j in sorted(m.edges))]
    for u, w in _sample_pairs(g.n, seed):
        system = alternating_path_system(g, m, u, w, k)
        lines.append(f"pair: {u_label(u)} {w_label(w)}")
        lines += [f"path: {_walk_text(walk)}" for walk in system.paths]
    return lines


def _menger_lines(d: Digraph, k: int, seed) -> list[str]:
    lines = []
    for s, t in _sample_ordered(d.n, seed):
        system = menger_paths(d, s, t, k)
        lines.append(f"pair: {s + 1} {t + 1}")
        lines += ["path: " + " ".join(str(v + 1) for v in p) for p in system.paths]
    return lines


def _negative_extendability_witness(g: BipartiteGraph, k: int):
    if k > g.n - 1:
        return "size-cap", (f"reason: k={k} exceeds n-1={g.n - 1}",)
    if not connected(g):
        return "disconnected", ()
    if not has_perfect_matching(g):
        return "no-perfect-matching", ()
    if g.n <= 8:
        verdict = is_k_extendable_oracle(g, k)
        if verdict.witness is not None:
            edges = " ".join(f"{i + 1}-{j + 1}"
                             for i, j in verdict.witness.sorted_edges())
            return "non-extendable-matching", (f"edges: {edges}",)
    nb = is_k_extendable_via_neighborhood(g, k)
    if nb.deficient_set is not None:
        return "deficient-set", ("u-set: " + " ".join(str(i + 1)
                                                      for i in nb.deficient_set),)
    raise AssertionError("no witness found although the property fails")


def build_certificate(obj, claim: str, k: int, seed=0) -> Certificate:
    """Decide the claim on the instance and package a re-checkable witness."""
    if claim == "k-extendable":
        if not isinstance(obj, BipartiteGraph):
            raise ValueError("k-extendable applies to bipartite graph instances")
        if k < 0:
            raise ValueError("k must be nonnegative")
        holds = is_k_extendable(obj, k)
        if holds:
            if k == 0:
                m = first_perfect_matching(obj)
                lines = ["edges: " + " ".join(f"{i + 1}-{j + 1}"
                                              for i, j in m.sorted_edges())]
                return Certificate(claim, k, True, obj, "perfect-matching", tuple(lines))
            m = first_perfect_matching(obj)
            return Certificate(claim, k, True, obj, "alt-path-systems",
                               tuple(_alt_system_lines(obj, m, k, seed)))
        kind, lines = _negative_extendability_witness(obj, k)
        return Certificate(claim, k, False, obj, kind, tuple(lines))

    if claim == "k-strong":
        if not isinstance(obj, Digraph):
            raise ValueError("k-strong applies to digraph instances")
        if k < 1:
            raise ValueError("k must be at least 1")
        d = obj.loop_free()
        verdict = is_k_strong(d, k)
        if verdict.holds:
            return Certificate(claim, k, True, obj, "menger-path-systems",
                               tuple(_menger_lines(d, k, seed)))
        if verdict.separator is None:
            return Certificate(claim, k, False, obj, "too-few-vertices",
                               (f"reason: {verdict.reason}",))
        sep = " ".join(str(v + 1) for v in verdict.separator)
        return Certificate(claim, k, False, obj, "separator", (f"vertices: {sep}",))

    if claim == "k-indecomposable":
        if not isinstance(obj, ZeroOneMatrix):
            raise ValueError("k-indecomposable applies to matrix instances")
        res = is_k_partly_decomposable(obj, k)
        if res.holds:
            w = res.witness
            lines = ("rows: " + " ".join(str(i + 1) for i in w.row_subset),
                     "cols: " + " ".join(str(j + 1) for j in w.col_subset))
            return Certificate(claim, k, False, obj, "zero-block", lines)
        g = bipartite_of_matrix(obj)
        if k == 0:
            m = first_perfect_matching(g)
            lines = ["edges: " + " ".join(f"{i + 1}-{j + 1}"
                                          for i, j in m.sorted_edges())]
            return Certificate(claim, k, True, obj, "perfect-matching", tuple(lines))
        m = first_perfect_matching(g)
        return Certificate(claim, k, True, obj, "alt-path-systems",
                           tuple(_alt_system_lines(g, m, k, seed)))

    if claim == "k-irreducible":
        if not isinstance(obj, ZeroOneMatrix):
            raise ValueError("k-irreducible applies to matrix instances")
        res = is_k_reducible(obj, k)
        if res.holds:
            w = res.witness
            lines = ("rows: " + " ".join(str(i + 1) for i in w.row_subset),
                     "cols: " + " ".join(str(j + 1) for j in w.col_subset))
            return Certificate(claim, k, False, obj, "zero-block", lines)
        if k == obj.n:
            return Certificate(claim, k, True, obj, "size-cap",
                               ("reason: no matrix of order n is n-reducible",))
        return Certificate(claim, k, True, obj, "menger-path-systems",
                           tuple(_menger_lines(digraph_of_matrix(obj).loop_free(), k, seed)))

    raise ValueError(f"unknown claim {claim!r}")


# ---------------------------------------------------------------------------
# checking


def _recompute_verdict(cert: Certificate) -> bool:
    obj, k = cert.instance, cert.k
    if cert.claim == "k-extendable":
        return is_k_extendable(obj, k)
    if cert.claim == "k-strong":
        return is_k_strong(obj.loop_free(), k).holds
    if cert.claim == "k-indecomposable":
        return not is_k_partly_decomposable(obj, k).holds
    if cert.claim == "k-irreducible":
        return not is_k_reducible(obj, k).holds
    raise ValueError(f"unknown claim {cert.claim!r}")


def _split_sections(lines) -> list[tuple]:
    """Group 'pair:' headers with their 'path:' payloads."""
    sections = []
    current = None
    for line in lines:
        if line.startswith("pair:"):
            current = (line[len("pair:"):].split(), [])
            sections.append(current)
        elif line.startswith("path:"):
            if current is None:
                raise ValueError("path line before any pair line")
            current[1].append(line[len("path:"):].strip())
    return sections


def _check_witness(cert: Certificate) -> list[str]:
    obj, k = cert.instance, cert.k
    kind = cert.witness_kind
    problems: list[str] = []

    if kind == "alt-path-systems":
        g = obj if isinstance(obj, BipartiteGraph) else bipartite_of_matrix(obj)
        m_edges = None
        for line in cert.witness_lines:
            if line.startswith("matching:"):
                m_edges = frozenset(
                    (int(p.split("-")[0]) - 1, int(p.split("-")[1]) - 1)
                    for p in line[len("matching:"):].split())
        if m_edges is None:
            return ["alt-path witness is missing its matching line"]
        try:
            matching = Matching(m_edges, g)
        except ValueError as exc:
            return [f"embedded matching invalid: {exc}"]
        if not matching.is_perfect:
            return ["embedded matching is not perfect"]
        for (pair, path_lines) in _split_sections(cert.witness_lines):
            pu, pw = _parse_walk(" ".join(pair))
            walks = tuple(_parse_walk(p) for p in path_lines)
            if len(walks) != k:
                problems.append(f"pair {pair}: {len(walks)} paths, expected {k}")
            system = AltPathSystem(walks, matching, pu[1], pw[1])
            problems += check_alternating_path_system(g, system)
        return problems

    if kind == "menger-path-systems":
        d = (obj if isinstance(obj, Digraph) else digraph_of_matrix(obj)).loop_free()
        for (pair, path_lines) in _split_sections(cert.witness_lines):
            s, t = int(pair[0]) - 1, int(pair[1]) - 1
            paths = tuple(tuple(int(x) - 1 for x in p.split()) for p in path_lines)
            if len(paths) != k:
                problems.append(f"pair {pair}: {len(paths)} paths, expected {k}")
            system = PathSystem(paths, "internally_disjoint_same_endpoints",
                                (s,), (t,))
            problems += check_path_system(d, system)
        return problems

    if kind == "separator":
        d = obj.loop_free()
        sep = []
        for line in cert.witness_lines:
            if line.startswith("vertices:"):
                sep = [int(x) - 1 for x in line[len("vertices:"):].split()]
        if len(sep) >= k:
            problems.append(f"separator has order {len(sep)}, not below k={k}")
        keep = [v for v in range(d.n) if v not in sep]
        if len(keep) < 2:
            problems.append("separator leaves fewer than two vertices")
        remap = {v: i for i, v in enumerate(keep)}
        sub = Digraph(len(keep), frozenset(
            (remap[a], remap[b]) for a, b in d.arcs
            if a in remap and b in remap))
        if is_strong(sub):
            problems.append("removing the separator leaves a strong digraph")
        return problems

    if kind == "non-extendable-matching":
        g = obj
        edges = frozenset()
        for line in cert.witness_lines:
            if line.startswith("edges:"):
                edges = frozenset(
                    (int(p.split("-")[0]) - 1, int(p.split("-")[1]) - 1)
                    for p in line[len("edges:"):].split())
        try:
            m0 = Matching(edges, g)
        except ValueError as exc:
            return [f"witness matching invalid: {exc}"]
        if m0.size != k:
            problems.append(f"witness matching has size {m0.size}, expected {k}")
        if matching_extends(g, m0):
            problems.append("witness matching extends to a perfect matching")
        return problems

    if kind == "deficient-set":
        g = obj
        x = []
        for line in cert.witness_lines:
            if line.startswith("u-set:"):
                x = [int(v) - 1 for v in line[len("u-set:"):].split()]
        if not x:
            return ["deficient set is empty"]
        nbhd = set()
        for i in x:
            nbhd.update(g.u_neighbors(i))
        if len(nbhd) >= len(x) + k:
            problems.append("the set is not deficient")
        return problems

    if kind == "zero-block":
        a = obj
        rows = cols = []
        for line in cert.witness_lines:
            if line.startswith("rows:"):
                rows = [int(x) - 1 for x in line[len("rows:"):].split()]
            if line.startswith("cols:"):
                cols = [int(x) - 1 for x in line[len("cols:"):].split()]
        if not rows or not cols:
            return ["zero block needs nonempty row and column sets"]
        if len(rows) + len(cols) != a.n - k + 1:
            problems.append(f"block sizes {len(rows)}+{len(cols)} != n-k+1")
        if cert.claim == "k-irreducible" and set(rows) & set(cols):
            problems.append("row and column sets overlap in the symmetric family")
        for i in rows:
            for j in cols:
                if a.rows[i][j]:
                    problems.append(f"entry ({i + 1},{j + 1}) is 1")
        return problems

    if kind == "perfect-matching":
        g = obj if isinstance(obj, BipartiteGraph) else bipartite_of_matrix(obj)
        edges = frozenset()
        for line in cert.witness_lines:
            if line.startswith("edges:"):
                edges = frozenset(
                    (int(p.split("-")[0]) - 1, int(p.split("-")[1]) - 1)
                    for p in line[len("edges:"):].split())
        try:
            m = Matching(edges, g)
        except ValueError as exc:
            return [f"witness matching invalid: {exc}"]
        if not m.is_perfect:
            problems.append("witness matching is not perfect")
        return problems

    if kind == "disconnected":
        if connected(obj):
            problems.append("instance is connected")
        return problems

    if kind == "no-perfect-matching":
        g = obj if isinstance(obj, BipartiteGraph) else bipartite_of_matrix(obj)
        if has_perfect_matching(g):
            problems.append("instance has a perfect matching")
        return problems

    if kind in ("size-cap", "too-few-vertices"):
        return problems

    return [f"unknown witness kind {kind!r}"]


def check_certificate(cert: Certificate) -> list[str]:
    """Re-derive the verdict and re-validate the witness; empty = verified."""
    problems = []
    recomputed = _recompute_verdict(cert)
    if recomputed != cert.verdict:
        problems.append(
            f"verdict says {'holds' if cert.verdict else 'fails'} but the claim "
            f"{'holds' if recomputed else 'fails'} on the embedded instance")
    problems += _check_witness(cert)
    return problems
