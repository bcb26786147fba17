"""Reducibility and decomposability of 0-1 matrices, their k-generalisations,
diagonals, and the cross-equivalences with graphs and digraphs.

A matrix is reducible when one symmetric permutation exposes an all-zero
l x (n-l) block (equivalently: its digraph is not strong), and partly
decomposable when independent row/column permutations do (equivalently:
its bipartite graph is not 1-extendable).  The k-variants relax the block
to l x (n-k+1-l) and line up with k-strong connectivity respectively
k-extendability.  Decisions run through the graph routes; witnesses and
the definitional oracles come from direct block/permutation search.

Boundary cases pinned here rather than discovered later:

* k-reducibility at k = n is impossible (both block sides must be
  nonempty), while no digraph on n vertices is n-strong; the digraph
  equivalence therefore holds only for k <= n-1.
* for k = 0 the block bound is l <= n, so an all-zero column (block
  n x 1) counts; 0-indecomposable then coincides exactly with "a perfect
  matching exists".
* at order 1 both matrices are fully indecomposable by the block
  definition, although B([[0]]) has no perfect matching; the bipartite
  route is applied only for n >= 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator

from .core import TooLargeError, ZeroOneMatrix
from .correspond import bipartite_of_matrix, digraph_of_matrix
from .connectivity import is_k_strong, is_strong, strong_components
from .matching import count_perfect_matchings, has_perfect_matching


# ---------------------------------------------------------------------------
# helpers


def with_unit_diagonal(a: ZeroOneMatrix) -> ZeroOneMatrix:
    """Boolean A + I."""
    return ZeroOneMatrix(tuple(
        tuple(1 if i == j else a.rows[i][j] for j in range(a.n))
        for i in range(a.n)))


def has_positive_main_diagonal(a: ZeroOneMatrix) -> bool:
    return all(a.rows[i][i] == 1 for i in range(a.n))


def _zero_columns(a: ZeroOneMatrix, rows) -> list[int]:
    return [j for j in range(a.n) if all(a.rows[i][j] == 0 for i in rows)]


# ---------------------------------------------------------------------------
# witnesses


@dataclass(frozen=True)
class DecompositionWitness:
    """Location of an all-zero block certifying (k-)reducibility or
    (k-)partial decomposability, with permutations realising the block
    form.  Permutations are index vectors: new position -> original index.
    The reducible family uses one permutation symmetrically."""

    kind: str
    row_subset: tuple
    col_subset: tuple
    l: int
    k: int
    row_permutation: tuple
    col_permutation: tuple


def check_witness(a: ZeroOneMatrix, w: DecompositionWitness) -> list[str]:
    problems = []
    n = a.n
    rows, cols = w.row_subset, w.col_subset
    if not rows or not cols:
        problems.append("row or column subset empty")
        return problems
    if w.l != len(rows):
        problems.append("l does not match the row subset size")
    # the plain kinds carry k = 1, so one formula covers all four
    expected_cols = n - w.k + 1 - len(rows)
    if len(cols) != expected_cols:
        problems.append(f"column subset has size {len(cols)}, expected {expected_cols}")
    for i in rows:
        for j in cols:
            if a.rows[i][j] != 0:
                problems.append(f"entry ({i + 1},{j + 1}) inside the block is 1")
    if w.kind in ("reducible", "k_reducible"):
        if set(rows) & set(cols):
            problems.append("row and column subsets overlap in the symmetric family")
        if w.row_permutation != w.col_permutation:
            problems.append("symmetric family needs one shared permutation")
    for perm in (w.row_permutation, w.col_permutation):
        if sorted(perm) != list(range(n)):
            problems.append(f"{perm} is not a permutation of 0..{n - 1}")
    return problems


def _symmetric_witness(kind: str, a: ZeroOneMatrix, rows: tuple, cols: tuple,
                       k: int) -> DecompositionWitness:
    mid = tuple(v for v in range(a.n) if v not in rows and v not in cols)
    perm = tuple(rows) + mid + tuple(cols)
    return DecompositionWitness(kind, tuple(rows), tuple(cols), len(rows), k,
                                perm, perm)


def _independent_witness(kind: str, a: ZeroOneMatrix, rows: tuple, cols: tuple,
                         k: int) -> DecompositionWitness:
    row_perm = tuple(rows) + tuple(i for i in range(a.n) if i not in rows)
    col_perm = tuple(j for j in range(a.n) if j not in cols) + tuple(cols)
    return DecompositionWitness(kind, tuple(rows), tuple(cols), len(rows), k,
                                row_perm, col_perm)


# ---------------------------------------------------------------------------
# block searches (definitional; also provide normalised witnesses)


def _search_block_disjoint(a: ZeroOneMatrix, k: int):
    """Smallest-l, lexicographically first disjoint (rows, cols) pair with
    |rows| + |cols| = n - k + 1 and an all-zero block."""
    n = a.n
    for l in range(1, n - k + 1):
        want = n - k + 1 - l
        for rows in combinations(range(n), l):
            zero = [j for j in _zero_columns(a, rows) if j not in rows]
            if len(zero) >= want:
                return rows, tuple(zero[:want])
    return None


def _search_block_independent(a: ZeroOneMatrix, k: int):
    """Same, but rows and columns chosen independently; l may reach n when
    k = 0 (an all-zero column block)."""
    n = a.n
    top = n if k == 0 else n - k
    for l in range(1, top + 1):
        want = n - k + 1 - l
        for rows in combinations(range(n), l):
            zero = _zero_columns(a, rows)
            if len(zero) >= want:
                return rows, tuple(zero[:want])
    return None


def reducible_by_permutation_search(a: ZeroOneMatrix) -> bool:
    """Literal definition: some symmetric permutation puts an all-zero
    l x (n-l) block in the upper right corner."""
    n = a.n
    if n > 7:
        raise TooLargeError("permutation search is factorial; guard is n <= 7")
    for perm in permutations(range(n)):
        for l in range(1, n):
            if all(a.rows[perm[i]][perm[j]] == 0
                   for i in range(l) for j in range(l, n)):
                return True
    return False


def k_reducible_by_permutation_search(a: ZeroOneMatrix, k: int) -> bool:
    n = a.n
    if n > 7:
        raise TooLargeError("permutation search is factorial; guard is n <= 7")
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in 1..{n}")
    for perm in permutations(range(n)):
        for l in range(1, n - k + 1):
            if all(a.rows[perm[i]][perm[j]] == 0
                   for i in range(l) for j in range(l + k - 1, n)):
                return True
    return False


def k_reducible_by_blocks(a: ZeroOneMatrix, k: int) -> bool:
    """Disjoint-subset form of the definition (equivalent to the symmetric
    permutation search)."""
    if not 1 <= k <= a.n:
        raise ValueError(f"k must lie in 1..{a.n}")
    if k == a.n:
        return False
    return _search_block_disjoint(a, k) is not None


def k_partly_decomposable_by_blocks(a: ZeroOneMatrix, k: int) -> bool:
    """Pure zero-submatrix condition with independent row/column choices."""
    if not 0 <= k <= a.n - 1:
        raise ValueError(f"k must lie in 0..{a.n - 1}")
    return _search_block_independent(a, k) is not None


# ---------------------------------------------------------------------------
# decisions through the graph routes


@dataclass(frozen=True)
class MatrixPropertyResult:
    holds: bool  # True = reducible / decomposable (the witnessed property)
    witness: DecompositionWitness | None = None

    def __bool__(self) -> bool:
        return self.holds


def is_reducible(a: ZeroOneMatrix) -> MatrixPropertyResult:
    """Reducible iff the digraph of A is not strong (loops ignored).

    The witness row set is the smallest sink strong component: no arcs
    leave it, so the complementary columns are all zero.
    """
    d = digraph_of_matrix(a).loop_free()
    if a.n == 1 or is_strong(d):
        return MatrixPropertyResult(False)
    comps = strong_components(d)
    outgoing = {c: False for c in comps}
    comp_of = {}
    for c in comps:
        for v in c:
            comp_of[v] = c
    for x, y in d.arcs:
        if comp_of[x] != comp_of[y]:
            outgoing[comp_of[x]] = True
    sinks = [tuple(sorted(c)) for c in comps if not outgoing[c]]
    rows = min(sinks, key=lambda c: (len(c), c))
    cols = tuple(v for v in range(a.n) if v not in rows)
    return MatrixPropertyResult(True, _symmetric_witness("reducible", a, rows, cols, 1))


def is_k_reducible(a: ZeroOneMatrix, k: int) -> MatrixPropertyResult:
    """k-reducible iff the digraph of A is not k-strong, for k <= n-1;
    k = n is impossible by the definition."""
    n = a.n
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in 1..{n}")
    if k == n:
        return MatrixPropertyResult(False)
    d = digraph_of_matrix(a).loop_free()
    if is_k_strong(d, k).holds:
        return MatrixPropertyResult(False)
    found = _search_block_disjoint(a, k)
    if found is None:
        raise AssertionError("digraph route says k-reducible but no block exists")
    rows, cols = found
    return MatrixPropertyResult(True, _symmetric_witness("k_reducible", a, rows, cols, k))


def is_partly_decomposable(a: ZeroOneMatrix) -> MatrixPropertyResult:
    """Partly decomposable iff B(A) is not 1-extendable (n >= 2); order-1
    matrices are never partly decomposable."""
    from .extendability import is_k_extendable

    if a.n == 1:
        return MatrixPropertyResult(False)
    if is_k_extendable(bipartite_of_matrix(a), 1):
        return MatrixPropertyResult(False)
    found = _search_block_independent(a, 1)
    if found is None:
        raise AssertionError("graph route says partly decomposable but no block exists")
    rows, cols = found
    return MatrixPropertyResult(
        True, _independent_witness("partly_decomposable", a, rows, cols, 1))


def is_k_partly_decomposable(a: ZeroOneMatrix, k: int) -> MatrixPropertyResult:
    """k-partly decomposable iff B(A) is not k-extendable; at k = 0 this is
    exactly the absence of a perfect matching."""
    from .extendability import is_k_extendable

    n = a.n
    if not 0 <= k <= n - 1:
        raise ValueError(f"k must lie in 0..{n - 1}")
    g = bipartite_of_matrix(a)
    if k == 0:
        decomposable = not has_perfect_matching(g)
    else:
        decomposable = not is_k_extendable(g, k)
    if not decomposable:
        return MatrixPropertyResult(False)
    found = _search_block_independent(a, k)
    if found is None:
        raise AssertionError("graph route says k-partly decomposable but no block exists")
    rows, cols = found
    return MatrixPropertyResult(
        True, _independent_witness("k_partly_decomposable", a, rows, cols, k))


def fully_indecomposable_by_diagonals(a: ZeroOneMatrix) -> bool:
    """Diagonal criterion: every 1-entry lies on an all-ones diagonal and
    every 0-entry on a diagonal whose only zero is itself.  Both demands
    collapse to: every minor's permanent is positive."""
    g = bipartite_of_matrix(a)
    n = a.n
    for i in range(n):
        for j in range(n):
            if not has_perfect_matching(g, frozenset({i}), frozenset({j})):
                return False
    return True


# ---------------------------------------------------------------------------
# cross-equivalences


@dataclass(frozen=True)
class CrossCheckReport:
    k: int
    k_indecomposable: bool
    k_irreducible: bool
    plus_identity_k_indecomposable: bool
    digraph_k_strong: bool
    positive_diagonal: bool
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations


def irreducible_indecomposable_cross_check(a: ZeroOneMatrix, k: int) -> CrossCheckReport:
    """Audit, on one matrix: k-indecomposable implies k-irreducible;
    k-irreducible iff A+I is k-indecomposable; and for matrices with a
    positive main diagonal, k-indecomposable iff the digraph of A is
    k-strong.  Any violated implication is reported, not raised."""
    if not 1 <= k <= a.n - 1:
        raise ValueError(f"k must lie in 1..{a.n - 1}")
    k_indec = not is_k_partly_decomposable(a, k).holds
    k_irr = not is_k_reducible(a, k).holds
    plus_indec = not is_k_partly_decomposable(with_unit_diagonal(a), k).holds
    k_strong = is_k_strong(digraph_of_matrix(a).loop_free(), k).holds
    positive = has_positive_main_diagonal(a)
    violations = []
    if k_indec and not k_irr:
        violations.append("k-indecomposable but k-reducible")
    if k_irr != plus_indec:
        violations.append("k-irreducible does not match (A+I) k-indecomposable")
    if positive and k_indec != k_strong:
        violations.append("positive diagonal: k-indecomposable does not match k-strong")
    return CrossCheckReport(k, k_indec, k_irr, plus_indec, k_strong, positive,
                            tuple(violations))


# ---------------------------------------------------------------------------
# diagonals


@dataclass(frozen=True)
class Diagonal:
    """n entries, one per row and column: ``columns[i]`` is row i's column."""

    columns: tuple
    zero_count: int

    @property
    def is_main(self) -> bool:
        return all(c == i for i, c in enumerate(self.columns))


def diagonals(a: ZeroOneMatrix, zero_count: int | None = None) -> Iterator[Diagonal]:
    """Stream all n! diagonals in lexicographic order, optionally only
    those with a given number of zero entries."""
    if a.n > 9:
        raise TooLargeError(f"diagonal enumeration is factorial; n={a.n} exceeds the guard")
    for perm in permutations(range(a.n)):
        zeros = sum(1 for i, c in enumerate(perm) if a.rows[i][c] == 0)
        if zero_count is None or zeros == zero_count:
            yield Diagonal(tuple(perm), zeros)


def nonzero_diagonal_count(a: ZeroOneMatrix) -> int:
    """Equals the number of perfect matchings of B(A)."""
    return count_perfect_matchings(bipartite_of_matrix(a))
