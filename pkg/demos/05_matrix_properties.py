# The matrix layer: reducibility and decomposability, their k-variants,
# diagonals, and the cross-equivalences with graphs and digraphs.

import numpy as np

from extendix import (ZeroOneMatrix, diagonals, irreducible_indecomposable_cross_check,
                      is_k_partly_decomposable, is_k_reducible, is_partly_decomposable,
                      is_reducible, nonzero_diagonal_count, with_unit_diagonal)

swap = ZeroOneMatrix.from_array(np.array([[0, 1], [1, 0]]))
print("A =\n", swap.to_array())
print("reducible:", is_reducible(swap).holds)
res = is_partly_decomposable(swap)
print("partly decomposable:", res.holds)
print("  zero block rows/cols:", res.witness.row_subset, res.witness.col_subset)
print("  realizing permutations P, Q:", res.witness.row_permutation,
      res.witness.col_permutation)

# irreducible but partly decomposable: the implication between the two
# families runs one way only, and adding the identity bridges them
plus = with_unit_diagonal(swap)
print("A + I fully indecomposable:", not is_partly_decomposable(plus).holds)
report = irreducible_indecomposable_cross_check(swap, 1)
print("cross-check violations:", report.violations or "none")

# k-variants relax the zero block to l x (n-k+1-l)
j3 = ZeroOneMatrix.ones(3)
cyc = ZeroOneMatrix(((0, 1, 0), (0, 0, 1), (1, 0, 0)))
for name, a in [("J3", j3), ("cycle", cyc)]:
    ks_irr = [k for k in (1, 2) if not is_k_reducible(a, k).holds]
    ks_ind = [k for k in (0, 1, 2) if not is_k_partly_decomposable(a, k).holds]
    print(f"{name}: k-irreducible for k in {ks_irr}, "
          f"k-indecomposable for k in {ks_ind}")

# diagonals are perfect matchings of the associated bipartite graph
print("\ndiagonals of the swap matrix:")
for diag in diagonals(swap):
    print("  columns", diag.columns, "zeros:", diag.zero_count)
print("nonzero diagonals of J3:", nonzero_diagonal_count(j3))
