# One structure, three faces: a balanced bipartite graph with a perfect
# matching, a digraph, and a 0-1 matrix.  This script walks the triangle.

import numpy as np

from extendix import (ZeroOneMatrix, bipartite_of_digraph, bipartite_of_matrix,
                      canonical_matching, cycle_bipartite, digraph_of,
                      reduced_adjacency)

# the 6-cycle: u1-w1-u3-w3-u2-w2-u1, stored as index pairs
g = cycle_bipartite(3)
print("graph:", g)

# its reduced adjacency matrix has a_ij = 1 iff u_i w_j is an edge
a = reduced_adjacency(g)
print("reduced adjacency:\n", a.to_array())

# numpy round trip, for when a matrix comes from elsewhere
same = bipartite_of_matrix(ZeroOneMatrix.from_array(np.array(a.to_array())))
assert same == g

# contract a perfect matching: every matching edge becomes a vertex, every
# other edge an arc.  The 6-cycle collapses onto a directed triangle.
m = canonical_matching(g)
d, cmap = digraph_of(g, m)
print("derived digraph:", d)

# the correspondence map is explicit in both directions
for v in range(d.n):
    print(f"  vertex {v} <- matching edge {cmap.matching_edge_of_vertex(v)}")
for arc in d.sorted_arcs():
    print(f"  arc {arc} <- edge {cmap.nonmatching_edge_of_arc(arc)}")

# and back: the graph of a digraph is unique (canonical matching + arcs)
g2, m2, _ = bipartite_of_digraph(d)
assert (g2, m2.edges) == (g, m.edges)
print("round trip graph -> digraph -> graph is exact")

# a different perfect matching of the same graph may give a different
# digraph; the translation records the W-relabelling it used
other = type(m)(frozenset({(0, 1), (1, 2), (2, 0)}), g)
d_other, cmap_other = digraph_of(g, other)
print("other matching gives:", d_other, "w-relabel:", cmap_other.w_relabel)
