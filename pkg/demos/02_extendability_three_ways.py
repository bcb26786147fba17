# k-extendability decided three independent ways: by brute-force matching
# enumeration, through the derived digraph, and by neighborhood counting.

from extendix import (canonical_matching, complete_bipartite, cycle_bipartite,
                      digraph_of, is_k_extendable_oracle,
                      is_k_extendable_via_digraph, is_k_extendable_via_neighborhood,
                      max_extendability, random_bipartite_with_pm,
                      vertex_connectivity)

c6 = cycle_bipartite(3)
k33 = complete_bipartite(3)

for name, g in [("C6", c6), ("K33", k33)]:
    print(f"{name}: max extendability = {max_extendability(g)}")
    for k in (1, 2):
        oracle = is_k_extendable_oracle(g, k)
        digraph = is_k_extendable_via_digraph(g, canonical_matching(g), k)
        nbhd = is_k_extendable_via_neighborhood(g, k)
        print(f"  k={k}: oracle={oracle.holds} digraph={digraph} "
              f"neighborhood={nbhd.holds}")
        if oracle.witness is not None:
            print(f"    stuck matching: {oracle.witness.sorted_edges()}")
        if nbhd.deficient_set is not None:
            print(f"    deficient U-set: {nbhd.deficient_set}")

# the equivalence in one line: extendability is the connectivity of the
# derived digraph, whichever perfect matching you contract
g = random_bipartite_with_pm(6, 0.35, seed=42)
d, _ = digraph_of(g, canonical_matching(g))
assert max_extendability(g) == vertex_connectivity(d)
print(f"\nrandom n=6 instance: kappa(D) = max extendability = "
      f"{vertex_connectivity(d)}")
