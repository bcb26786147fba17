"""Balanced bipartite graphs with perfect matchings, digraphs, and 0-1
matrices are three faces of one structure: contracting a perfect matching
turns a graph into a digraph, and the reduced adjacency matrix carries
both.  This package builds the translation explicitly in both directions
and uses it to decide k-extendability, k-strong connectivity and
(in)decomposability by several independent routes, to decompose
non-1-extendable graphs into elementary pieces aligned with strong
components, and to hunt for minimal instances.
"""

from .core import (BipartiteGraph, Digraph, ExtendixError, InvalidInstanceError,
                   Matching, TooLargeError, ValidationReport, ZeroOneMatrix,
                   canonical_matching, complete_bipartite, complete_digraph, connected,
                   cycle_bipartite, directed_cycle, iter_bipartite_with_canonical,
                   iter_digraphs, iter_matrices, matching_graph,
                   random_bipartite_with_pm, random_digraph, validate)
from .correspond import (CorrespondenceMap, bipartite_of_digraph, bipartite_of_matrix,
                         digraph_of, digraph_of_matrix, matrix_of_digraph,
                         reduced_adjacency)
from .matching import (AltComponent, EdgeClassification, classify_edges,
                       count_perfect_matchings, enumerate_matchings,
                       first_perfect_matching, flip_alternating_cycle,
                       has_perfect_matching, max_matching, perfect_matchings,
                       symmetric_difference, unique_pm_acyclic_check)
from .connectivity import (EarDecompositionD, InsufficientPathsError, PathSystem,
                           anti_directed_trail_find, cycles_through_vertex,
                           ear_decomposition_digraph, independent_path_system,
                           is_anti_directed_trail, is_k_strong, is_minimal_k_strong,
                           is_strong, menger_paths, minimal_k_strong_degree_audit,
                           one_way_pair_audit, strong_components, vertex_connectivity)
from .extendability import (AltPathSystem, ComponentMap, EarDecompositionB,
                            alternating_path_system, bipartite_ear_decomposition,
                            elementary_components, high_degree_subgraph_forest_check,
                            is_k_extendable, is_k_extendable_oracle,
                            is_k_extendable_via_digraph,
                            is_k_extendable_via_neighborhood, is_minimal_k_extendable,
                            max_extendability, minimal_k_extendable_degree_audit,
                            minimality_transfer_check)
from .matrixlab import (DecompositionWitness, Diagonal, diagonals,
                        fully_indecomposable_by_diagonals,
                        irreducible_indecomposable_cross_check,
                        is_k_partly_decomposable, is_k_reducible,
                        is_partly_decomposable, is_reducible,
                        k_partly_decomposable_by_blocks, k_reducible_by_blocks,
                        nonzero_diagonal_count, reducible_by_permutation_search,
                        with_unit_diagonal)
from .search import (find_minimality_counterexamples, minimal_k_extendable_graphs,
                     minimal_k_strong_digraphs)

__version__ = "0.1.0"
