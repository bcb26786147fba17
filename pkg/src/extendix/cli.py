"""Command-line surface: analyze, convert, certify, verify, search, randgen.

Exit codes: 0 = property holds / operation succeeded, 1 = property fails
(witness emitted), 2 = input error, 3 = search exhausted without result.
Output is deterministic for fixed seeds.
"""

from __future__ import annotations

import argparse
import random
import sys

from .core import (BipartiteGraph, Digraph, InvalidInstanceError, Matching,
                   ZeroOneMatrix, connected, random_bipartite_with_pm,
                   random_digraph, u_label, w_label)
from .correspond import (bipartite_of_digraph, bipartite_of_matrix, digraph_of,
                         reduced_adjacency)
from .connectivity import (ear_decomposition_digraph, strong_components,
                           vertex_connectivity)
from .extendability import elementary_components, max_extendability
from .matching import (classify_edges, count_perfect_matchings,
                       first_perfect_matching)
from .matrixlab import (is_k_partly_decomposable, is_k_reducible, is_partly_decomposable,
                        is_reducible, nonzero_diagonal_count)
from .certify import build_certificate, check_certificate
from .fileio import (ParseError, format_correspondence, format_instance,
                     instance_kind, read_certificate, read_instance)
from .search import (find_minimality_counterexamples, minimal_k_extendable_graphs,
                     minimal_k_strong_digraphs)


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# analyze


def _analyze_bipartite(g: BipartiteGraph) -> str:
    lines = [f"kind: bg", f"n: {g.n}", f"edges: {g.m}"]
    lines.append(f"connected: {'yes' if connected(g) else 'no'}")
    pm_count = count_perfect_matchings(g)
    lines.append(f"perfect-matchings: {pm_count}")
    ext = max_extendability(g)
    lines.append(f"max-extendability: {ext}")
    if pm_count > 0:
        cls = classify_edges(g)
        c = cls.counts
        lines.append("edge-classes: fixed_single={fixed_single} "
                     "fixed_double={fixed_double} "
                     "allowed_nonfixed={allowed_nonfixed}".format(**c))
        comap = elementary_components(g)
        lines.append(f"elementary-components: {len(comap.elementary)}")
        lines.append(f"fixed-double-singletons: {len(comap.fixed_double_singletons)}")
        for idx, piece in enumerate(comap.pieces, 1):
            us = " ".join(u_label(i) for i in sorted(piece.u_vertices))
            ws = " ".join(w_label(j) for j in sorted(piece.w_vertices))
            scc = " ".join(str(v + 1) for v in sorted(piece.scc))
            lines.append(f"component {idx}: {piece.kind} u=[{us}] w=[{ws}] scc=[{scc}]")
        if ext >= 1:
            summary = (f"{ext}-extendable, not {ext + 1}-extendable; "
                       f"{len(comap.elementary)} elementary component"
                       + ("s" if len(comap.elementary) != 1 else ""))
        else:
            summary = (f"not 1-extendable; {len(comap.elementary)} elementary "
                       f"component" + ("s" if len(comap.elementary) != 1 else ""))
    else:
        summary = "no perfect matching"
    lines.append(f"summary: {summary}")
    return "\n".join(lines) + "\n"


def _analyze_digraph(d: Digraph) -> str:
    lines = [f"kind: dg", f"n: {d.n}", f"arcs: {d.m}"]
    comps = strong_components(d)
    strong = len(comps) == 1
    lines.append(f"strong: {'yes' if strong else 'no'}")
    lines.append(f"strong-components: {len(comps)}")
    for idx, comp in enumerate(comps, 1):
        lines.append(f"component {idx}: " + " ".join(str(v + 1) for v in sorted(comp)))
    kappa = vertex_connectivity(d.loop_free())
    lines.append(f"kappa: {kappa}")
    if strong and d.n >= 2 and not d.has_loops():
        dec = ear_decomposition_digraph(d)
        lines.append(f"ear-decomposition: {dec.ear_count} ears")
        for idx, ear in enumerate(dec.ears, 1):
            lines.append(f"ear {idx}: " + " ".join(str(v + 1) for v in ear))
        summary = (f"strong, kappa={kappa}; ear decomposition with "
                   f"{dec.ear_count} ear" + ("s" if dec.ear_count != 1 else ""))
    elif strong:
        summary = f"strong, kappa={kappa}"
    else:
        summary = f"not strong, {len(comps)} strong components"
    lines.append(f"summary: {summary}")
    return "\n".join(lines) + "\n"


def _analyze_matrix(a: ZeroOneMatrix) -> str:
    lines = [f"kind: mat", f"n: {a.n}",
             f"ones: {sum(sum(r) for r in a.rows)}"]
    lines.append(f"nonzero-diagonals: {nonzero_diagonal_count(a)}")
    irr = not is_reducible(a).holds
    lines.append(f"irreducible: {'yes' if irr else 'no'}")
    fully = not is_partly_decomposable(a).holds
    lines.append(f"fully-indecomposable: {'yes' if fully else 'no'}")
    indec_ks = [k for k in range(0, a.n) if not is_k_partly_decomposable(a, k).holds]
    irred_ks = [k for k in range(1, a.n) if not is_k_reducible(a, k).holds]
    lines.append("k-indecomposable: " + (" ".join(map(str, indec_ks)) or "none"))
    lines.append("k-irreducible: " + (" ".join(map(str, irred_ks)) or "none"))
    parts = []
    parts.append("fully indecomposable" if fully else "partly decomposable")
    if indec_ks and max(indec_ks) >= 1:
        parts.append(f"{max(indec_ks)}-indecomposable")
    parts.append("irreducible" if irr else "reducible")
    if irred_ks:
        parts.append(f"{max(irred_ks)}-irreducible")
    lines.append("summary: " + ", ".join(parts))
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    obj = read_instance(args.path)
    kind = instance_kind(obj)
    if args.kind and args.kind != kind:
        print(f"error: file is {kind!r}, not {args.kind!r}", file=sys.stderr)
        return 2
    if isinstance(obj, BipartiteGraph):
        text = _analyze_bipartite(obj)
    elif isinstance(obj, Digraph):
        text = _analyze_digraph(obj)
    else:
        text = _analyze_matrix(obj)
    _emit(text, args.out)
    return 0


# ---------------------------------------------------------------------------
# convert


def _parse_matching_arg(g: BipartiteGraph, text: str) -> Matching:
    edges = set()
    for token in text.split(","):
        token = token.strip()
        halves = token.split("-")
        if len(halves) != 2 or not all(h.isdigit() for h in halves):
            raise ValueError(f"bad matching token {token!r}, expected like 1-2")
        edges.add((int(halves[0]) - 1, int(halves[1]) - 1))
    return Matching(frozenset(edges), g)


def cmd_convert(args) -> int:
    obj = read_instance(args.path)
    direction = args.direction
    if direction == "g2d":
        if not isinstance(obj, BipartiteGraph):
            print("error: g2d needs a bg instance", file=sys.stderr)
            return 2
        if args.matching == "auto":
            m = first_perfect_matching(obj)
            if m is None:
                print("error: graph has no perfect matching", file=sys.stderr)
                return 2
        else:
            try:
                m = _parse_matching_arg(obj, args.matching)
            except ValueError as exc:
                print(f"error: {exc}", file=sys.stderr)
                return 2
            if not m.is_perfect:
                print("error: the given matching is not perfect", file=sys.stderr)
                return 2
        d, cmap = digraph_of(obj, m)
        _emit(format_instance(d), args.out)
        if args.out:
            with open(args.out + ".map", "w", encoding="utf-8") as fh:
                fh.write(format_correspondence(cmap, m))
        return 0
    if direction == "d2g":
        if not isinstance(obj, Digraph):
            print("error: d2g needs a dg instance", file=sys.stderr)
            return 2
        if obj.has_loops():
            print("error: digraph has loops", file=sys.stderr)
            return 2
        g, m, cmap = bipartite_of_digraph(obj)
        _emit(format_instance(g), args.out)
        if args.out:
            with open(args.out + ".map", "w", encoding="utf-8") as fh:
                fh.write(format_correspondence(cmap, m))
        return 0
    if direction == "g2m":
        if not isinstance(obj, BipartiteGraph):
            print("error: g2m needs a bg instance", file=sys.stderr)
            return 2
        _emit(format_instance(reduced_adjacency(obj)), args.out)
        return 0
    if direction == "m2g":
        if not isinstance(obj, ZeroOneMatrix):
            print("error: m2g needs a mat instance", file=sys.stderr)
            return 2
        _emit(format_instance(bipartite_of_matrix(obj)), args.out)
        return 0
    print(f"error: unknown direction {direction!r}", file=sys.stderr)
    return 2


# ---------------------------------------------------------------------------
# certify / verify


def cmd_certify(args) -> int:
    obj = read_instance(args.path)
    try:
        cert = build_certificate(obj, args.claim, args.k, args.seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    from .fileio import format_certificate

    text = format_certificate(cert)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"{'holds' if cert.verdict else 'fails'}: "
              f"{args.claim} k={args.k}; certificate written to {args.out}")
    else:
        sys.stdout.write(text)
    return 0 if cert.verdict else 1


def cmd_verify(args) -> int:
    cert = read_certificate(args.path)
    try:
        problems = check_certificate(cert)
    except (ValueError, KeyError, IndexError) as exc:
        problems = [f"witness payload malformed: {exc}"]
    if problems:
        print("certificate INVALID:")
        for p in problems:
            print(f"  - {p}")
        return 1
    print(f"certificate verified: {cert.claim} k={cert.k} "
          f"{'holds' if cert.verdict else 'fails'}")
    return 0


# ---------------------------------------------------------------------------
# search


def cmd_search(args) -> int:
    from .connectivity import anti_directed_trail_find, minimal_k_strong_degree_audit
    from .extendability import (high_degree_subgraph_forest_check,
                                minimal_k_extendable_degree_audit)

    k = args.k
    lines = [f"target: {args.target}", f"k: {k}", f"n-max: {args.n_max}"]
    found = 0
    body: list[str] = []
    if args.target == "minimal_k_strong":
        for n in range(2, args.n_max + 1):
            if found >= args.limit:
                break
            try:
                instances = list(minimal_k_strong_digraphs(n, k))
            except ValueError as exc:
                print(f"note: stopping at n={n - 1}: {exc}", file=sys.stderr)
                break
            for d in instances:
                found += 1
                body.append(f"instance {found}:")
                body += format_instance(d).rstrip("\n").split("\n")
                body.append("end-instance")
                audit = minimal_k_strong_degree_audit(d, k)
                body.append(f"degree-audit {found}: "
                            f"{'ok' if audit.ok else 'VIOLATION'} "
                            f"out-degree-{k}-count={audit.out_degree_k_count} "
                            f"in-degree-{k}-count={audit.in_degree_k_count}")
                trail = anti_directed_trail_find(d, k)
                body.append(f"anti-directed-trail {found}: "
                            + ("none" if trail is None else
                               " ".join(f"{a + 1}->{b + 1}" for a, b in trail)))
                if found >= args.limit:
                    break
    elif args.target == "minimal_k_extendable":
        for n in range(1, args.n_max + 1):
            if found >= args.limit:
                break
            try:
                instances = list(minimal_k_extendable_graphs(n, k))
            except ValueError as exc:
                print(f"note: stopping at n={n - 1}: {exc}", file=sys.stderr)
                break
            for g in instances:
                found += 1
                body.append(f"instance {found}:")
                body += format_instance(g).rstrip("\n").split("\n")
                body.append("end-instance")
                audit = minimal_k_extendable_degree_audit(g, k)
                body.append(f"degree-audit {found}: "
                            f"{'ok' if audit.ok else 'VIOLATION'} "
                            f"degree-{k + 1}-total={audit.degree_k_plus_1_total} "
                            f"u={audit.degree_k_plus_1_u} w={audit.degree_k_plus_1_w}")
                forest = high_degree_subgraph_forest_check(g, k)
                body.append(f"forest-check {found}: "
                            f"{'ok' if forest.ok else 'VIOLATION'}")
                if found >= args.limit:
                    break
    elif args.target == "minimality_counterexample":
        hits = find_minimality_counterexamples(args.n_max, k, limit=args.limit)
        for d, g, edge in hits:
            found += 1
            body.append(f"instance {found}:")
            body += format_instance(d).rstrip("\n").split("\n")
            body.append("end-instance")
            body.append(f"graph {found}:")
            body += format_instance(g).rstrip("\n").split("\n")
            body.append("end-instance")
            body.append(f"deletable-matching-edge {found}: "
                        f"{edge[0] + 1}-{edge[1] + 1}")
    else:
        print(f"error: unknown target {args.target!r}", file=sys.stderr)
        return 2
    lines.append(f"found: {found}")
    lines += body
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if found else 3


# ---------------------------------------------------------------------------
# randgen


def cmd_randgen(args) -> int:
    if args.n < 1:
        print("error: n must be at least 1", file=sys.stderr)
        return 2
    if args.kind == "bg":
        obj = random_bipartite_with_pm(args.n, args.p, args.seed)
    elif args.kind == "dg":
        obj = random_digraph(args.n, args.p, args.seed)
    elif args.kind == "mat":
        rng = random.Random(args.seed)
        rows = tuple(tuple(1 if rng.random() < args.p else 0
                           for _ in range(args.n)) for _ in range(args.n))
        obj = ZeroOneMatrix(rows)
    else:
        print(f"error: unknown kind {args.kind!r}", file=sys.stderr)
        return 2
    _emit(format_instance(obj), args.out)
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="extendix",
        description="Analyze, translate and certify bipartite matching "
                    "extendability, digraph connectivity and 0-1 matrix "
                    "decomposability.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="report the property battery of an instance")
    p.add_argument("path")
    p.add_argument("--kind", choices=["bg", "dg", "mat"])
    p.add_argument("--out")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("convert", help="translate between the three instance kinds")
    p.add_argument("path")
    p.add_argument("--direction", required=True, choices=["g2d", "d2g", "g2m", "m2g"])
    p.add_argument("--matching", default="auto",
                   help="perfect matching for g2d: 'auto' or like '1-1,2-2,3-3'")
    p.add_argument("--out")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("certify", help="emit a re-checkable certificate for a claim")
    p.add_argument("path")
    p.add_argument("--claim", required=True,
                   choices=["k-extendable", "k-strong", "k-indecomposable",
                            "k-irreducible"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify", help="re-check a certificate file")
    p.add_argument("path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="hunt for minimal instances or counterexamples")
    p.add_argument("--target", required=True,
                   choices=["minimal_k_strong", "minimal_k_extendable",
                            "minimality_counterexample"])
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--limit", type=int, default=5)
    p.add_argument("--out")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("randgen", help="write a seeded random instance")
    p.add_argument("--kind", required=True, choices=["bg", "dg", "mat"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_randgen)

    return parser


def main(argv=None) -> int:
    from .core import TooLargeError

    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, InvalidInstanceError, TooLargeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main_entry() -> None:
    raise SystemExit(main(sys.argv[1:]))
