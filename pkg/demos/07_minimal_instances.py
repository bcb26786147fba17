# Minimality: graphs/digraphs that lose their property under every single
# deletion.  Minimality transfers from the graph to the digraph but not
# back; the search below recovers a small counterexample to the converse.

from extendix import (anti_directed_trail_find, bipartite_of_digraph,
                      high_degree_subgraph_forest_check, is_k_extendable,
                      is_minimal_k_extendable, is_minimal_k_strong,
                      minimal_k_extendable_graphs, minimal_k_strong_digraphs,
                      minimal_k_strong_degree_audit,
                      minimal_k_extendable_degree_audit)
from extendix.search import find_minimality_counterexamples

print("minimal 1-strong digraphs on 4 vertices:",
      sum(1 for _ in minimal_k_strong_digraphs(4, 1)))
print("minimal 2-strong digraphs on 4 vertices:",
      sum(1 for _ in minimal_k_strong_digraphs(4, 2)))

# every one of them satisfies the extremal degree bounds
d = next(iter(minimal_k_strong_digraphs(4, 2)))
audit = minimal_k_strong_degree_audit(d, 2)
print(f"sample digraph {d.sorted_arcs()}: {audit.out_degree_k_count} vertices "
      f"of out-degree 2, {audit.in_degree_k_count} of in-degree 2")
print("anti-directed trail among high-degree arcs:",
      anti_directed_trail_find(d, 2))

g = next(iter(minimal_k_extendable_graphs(3, 1)))
rep = minimal_k_extendable_degree_audit(g, 1)
print(f"\nsample minimal 1-extendable graph {g.sorted_edges()}:")
print(f"  degree-2 vertices: {rep.degree_k_plus_1_total} "
      f"({rep.degree_k_plus_1_u} per class {rep.degree_k_plus_1_w})")
print("  high-degree edges form a forest:",
      high_degree_subgraph_forest_check(g, 1).ok)

# the transfer gap: a minimal strong digraph whose graph is not minimal
(d0, g0, edge), = find_minimality_counterexamples(n_max=6, k=1, limit=1)
print(f"\ncounterexample: {d0.sorted_arcs()} is minimal strong "
      f"({is_minimal_k_strong(d0, 1).holds})")
print(f"yet its graph minimal 1-extendable: "
      f"{is_minimal_k_extendable(g0, 1).holds}")
print(f"deleting the matching edge u{edge[0] + 1}-w{edge[1] + 1} keeps it "
      f"1-extendable: {is_k_extendable(g0.without_edge(edge), 1)}")
assert bipartite_of_digraph(d0)[0] == g0
