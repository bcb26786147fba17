# Ear decompositions on both sides of the translation: a strong digraph
# grows from any cycle by attached paths; a 1-extendable bipartite graph
# grows from any edge by odd paths.  The two constructions are images of
# each other.

from extendix import (bipartite_ear_decomposition, complete_bipartite,
                      complete_digraph, cycle_bipartite, digraph_of,
                      ear_decomposition_digraph)

d = complete_digraph(3)
dec = ear_decomposition_digraph(d, start_cycle=(0, 1))
print("digraph ears starting from the 2-cycle (0,1):")
for ear in dec.ears:
    print("  ", " -> ".join(map(str, ear)))

# the bipartite version: base edge plus odd ears; the decomposition also
# pins down the one perfect matching that restricts perfectly to every
# prefix of the construction
for g, name in [(cycle_bipartite(3), "C6"), (complete_bipartite(2), "K22"),
                (complete_bipartite(3), "K33")]:
    bdec = bipartite_ear_decomposition(g, start_edge=(0, 0))
    print(f"\n{name}: base edge u1-w1 plus {bdec.ear_count} ear(s)")
    for walk in bdec.ears:
        print("  ", " - ".join(f"{side}{v + 1}" for side, v in walk))
    print("   induced matching:", bdec.matching.sorted_edges())

# the bipartite ears ride on a digraph ear decomposition of the derived
# digraph; project the K33 one back down and look at it
g = complete_bipartite(3)
bdec = bipartite_ear_decomposition(g, (0, 0))
d, cmap = digraph_of(g, bdec.matching)
inverse = {orig: new for new, orig in enumerate(cmap.w_relabel)}
print("\nK33 ears projected onto the digraph:")
for walk in bdec.ears:
    seq = [walk[0][1]] + [inverse[v] for side, v in walk[1:] if side == "w"]
    print("  ", " -> ".join(map(str, seq)))
