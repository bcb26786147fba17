# Digraph-side machinery: connectivity, separators, disjoint path systems,
# cycle bundles through a vertex, and their pullbacks as alternating paths.

from extendix import (canonical_matching, complete_digraph, cycles_through_vertex,
                      bipartite_of_digraph, directed_cycle, independent_path_system,
                      alternating_path_system, is_k_strong, menger_paths,
                      one_way_pair_audit, vertex_connectivity)

k4 = complete_digraph(4)
print("kappa(complete digraph on 4) =", vertex_connectivity(k4))

c5 = directed_cycle(5)
print("kappa(directed 5-cycle) =", vertex_connectivity(c5))
res = is_k_strong(c5, 2)
print("2-strong?", res.holds, "| separator:", res.separator)

# Menger systems: three internally disjoint routes between any two
# vertices of the complete digraph on four vertices
ps = menger_paths(k4, 0, 3, 3)
for path in ps.paths:
    print("  path:", " -> ".join(map(str, path)))

# vertex-disjoint paths pairing sources with sinks
ips = independent_path_system(k4, sources=[0, 1], sinks=[2, 3])
print("independent paths:", ips.paths)

# k cycles through one vertex, meeting only there
for cyc in cycles_through_vertex(k4, 0, 3):
    print("  cycle through 0:", cyc)

# the one-way pair audit agrees with the flow-based decision
ok, pair = one_way_pair_audit(c5, 2)
print("one-way audit at k=2:", ok, "| violating pair:", pair)

# pulled back through the translation, Menger systems become internally
# disjoint alternating paths between the two colour classes
g, m, _ = bipartite_of_digraph(k4)
system = alternating_path_system(g, m, 0, 3, 3)
print(f"alternating u1..w4 paths (k=3) in B(K4):")
for walk in system.paths:
    print("  ", " - ".join(f"{side}{v + 1}" for side, v in walk))
