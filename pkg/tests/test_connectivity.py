import itertools

import pytest
from hypothesis import given, settings, strategies as st

from extendix import (Digraph, InsufficientPathsError, complete_digraph,
                      cycles_through_vertex, directed_cycle,
                      ear_decomposition_digraph, independent_path_system,
                      is_anti_directed_trail, anti_directed_trail_find,
                      is_k_strong, is_minimal_k_strong, is_strong, iter_digraphs,
                      menger_paths, minimal_k_strong_degree_audit,
                      one_way_pair_audit, random_digraph, strong_components,
                      vertex_connectivity)
from extendix.connectivity import check_ear_decomposition_digraph, check_path_system


def _kappa_by_separator_search(d: Digraph) -> int:
    """Independent oracle: try every vertex subset as a separator."""
    if d.n == 1 or not is_strong(d):
        return 0
    best = d.n - 1
    for size in range(0, d.n - 1):
        for removed in itertools.combinations(range(d.n), size):
            keep = [v for v in range(d.n) if v not in removed]
            if len(keep) < 2:
                continue
            remap = {v: i for i, v in enumerate(keep)}
            sub = Digraph(len(keep), frozenset(
                (remap[a], remap[b]) for a, b in d.arcs
                if a in remap and b in remap))
            if not is_strong(sub):
                return min(best, size)
    return best


class TestStrongComponents:
    def test_triangle(self):
        assert strong_components(directed_cycle(3)) == (frozenset({0, 1, 2}),)

    def test_single_arc(self):
        assert strong_components(Digraph(2, frozenset({(0, 1)}))) == (
            frozenset({0}), frozenset({1}))

    def test_two_cycle_with_tail(self):
        d = Digraph(3, frozenset({(0, 1), (1, 0), (1, 2)}))
        assert strong_components(d) == (frozenset({0, 1}), frozenset({2}))

    def test_partition_and_condensation_order(self):
        for seed in range(30):
            d = random_digraph(6, 0.25, seed=seed)
            comps = strong_components(d)
            assert sorted(v for c in comps for v in c) == list(range(6))
            index = {v: i for i, c in enumerate(comps) for v in c}
            for a, b in d.arcs:
                assert index[a] <= index[b]

    def test_is_strong_trivia(self):
        assert is_strong(directed_cycle(3))
        assert not is_strong(Digraph(2, frozenset({(0, 1)})))
        assert is_strong(Digraph(1, frozenset()))

    def test_agrees_with_is_strong_exhaustively(self):
        for d in iter_digraphs(3):
            assert (len(strong_components(d)) == 1) == is_strong(d)


class TestVertexConnectivity:
    def test_complete_4(self):
        assert vertex_connectivity(complete_digraph(4)) == 3

    def test_triangle(self):
        assert vertex_connectivity(directed_cycle(3)) == 1

    def test_single_arc(self):
        assert vertex_connectivity(Digraph(2, frozenset({(0, 1)}))) == 0

    def test_two_cycle(self):
        assert vertex_connectivity(directed_cycle(2)) == 1

    def test_against_separator_search_exhaustive(self):
        for d in iter_digraphs(3):
            assert vertex_connectivity(d) == _kappa_by_separator_search(d)

    def test_against_separator_search_n4(self):
        for d in itertools.islice(iter_digraphs(4), 0, 4096, 7):
            assert vertex_connectivity(d) == _kappa_by_separator_search(d)

    @pytest.mark.parametrize("n", [5, 6])
    def test_against_separator_search_random(self, n):
        for seed in range(25):
            d = random_digraph(n, 0.45, seed=seed)
            assert vertex_connectivity(d) == _kappa_by_separator_search(d)


class TestIsKStrong:
    def test_goldens(self):
        assert is_k_strong(directed_cycle(3), 1).holds
        res = is_k_strong(directed_cycle(3), 2)
        assert not res.holds and res.separator is not None
        assert is_k_strong(complete_digraph(3), 2).holds

    def test_size_clause(self):
        res = is_k_strong(complete_digraph(3), 3)
        assert not res.holds and res.separator is None

    def test_separator_witness_is_real(self):
        for seed in range(25):
            d = random_digraph(5, 0.4, seed=seed)
            kappa = vertex_connectivity(d)
            res = is_k_strong(d, kappa + 1)
            assert not res.holds
            if res.separator is not None:
                assert len(res.separator) <= kappa
                keep = [v for v in range(d.n) if v not in res.separator]
                remap = {v: i for i, v in enumerate(keep)}
                sub = Digraph(len(keep), frozenset(
                    (remap[a], remap[b]) for a, b in d.arcs
                    if a in remap and b in remap))
                assert not is_strong(sub)

    def test_agrees_with_kappa(self):
        for seed in range(20):
            d = random_digraph(5, 0.5, seed=seed)
            kappa = vertex_connectivity(d)
            for k in range(1, d.n):
                assert is_k_strong(d, k).holds == (kappa >= k)

    def test_rejects_k_zero(self):
        with pytest.raises(ValueError):
            is_k_strong(directed_cycle(3), 0)


class TestMengerPaths:
    def test_triangle_single_path(self):
        ps = menger_paths(directed_cycle(3), 0, 1, 1)
        assert ps.paths == ((0, 1),)

    def test_complete_two_paths(self):
        ps = menger_paths(complete_digraph(3), 0, 1, 2)
        assert set(ps.paths) == {(0, 1), (0, 2, 1)}

    def test_no_path_reports_cut(self):
        with pytest.raises(InsufficientPathsError) as err:
            menger_paths(Digraph(2, frozenset({(0, 1)})), 1, 0, 1)
        assert err.value.achievable == 0

    @pytest.mark.parametrize("n,stride", [(3, 1), (4, 5)])
    def test_menger_equivalence_small(self, n, stride):
        # k-strong iff k internally disjoint paths for every ordered pair
        for d in itertools.islice(iter_digraphs(n), 0, None, stride):
            for k in range(1, n):
                expected = is_k_strong(d, k).holds
                have_all = True
                for s in range(n):
                    for t in range(n):
                        if s == t:
                            continue
                        try:
                            ps = menger_paths(d, s, t, k)
                            assert len(ps.paths) == k
                            assert not check_path_system(d, ps)
                        except InsufficientPathsError:
                            have_all = False
                assert have_all == expected

    def test_rejects_equal_endpoints(self):
        with pytest.raises(ValueError):
            menger_paths(directed_cycle(3), 1, 1, 1)


class TestIndependentPathSystem:
    def test_single_pair_on_strong_digraph(self):
        ps = independent_path_system(directed_cycle(4), [0], [2])
        assert ps.paths == ((0, 1, 2),)

    def test_complete_4_two_pairs(self):
        ps = independent_path_system(complete_digraph(4), [0, 1], [2, 3])
        assert len(ps.paths) == 2
        assert not check_path_system(complete_digraph(4), ps)

    def test_distinctness_precondition(self):
        with pytest.raises(ValueError):
            independent_path_system(complete_digraph(4), [0, 1], [1, 3])

    def test_reports_obstruction_when_not_strong_enough(self):
        with pytest.raises(InsufficientPathsError) as err:
            independent_path_system(Digraph(2, frozenset({(0, 1)})), [1], [0])
        assert err.value.achievable == 0

    def test_exists_whenever_k_strong(self):
        for seed in range(30):
            d = random_digraph(6, 0.6, seed=seed)
            kappa = vertex_connectivity(d)
            for k in range(1, min(kappa, 3) + 1):
                sources = list(range(k))
                sinks = list(range(k, 2 * k))
                ps = independent_path_system(d, sources, sinks)
                assert len(ps.paths) == k
                assert not check_path_system(d, ps)


class TestCyclesThroughVertex:
    def test_triangle(self):
        assert cycles_through_vertex(directed_cycle(3), 0, 1) == ((0, 1, 2, 0),)

    def test_complete_3_two_cycles(self):
        cycles = cycles_through_vertex(complete_digraph(3), 0, 2)
        assert set(cycles) == {(0, 1, 0), (0, 2, 0)}

    def test_not_strong_rejected(self):
        with pytest.raises(ValueError):
            cycles_through_vertex(Digraph(2, frozenset({(0, 1)})), 0, 1)

    def test_pairwise_intersection_is_hub(self):
        for seed in range(20):
            d = random_digraph(6, 0.5, seed=seed)
            kappa = vertex_connectivity(d)
            for k in range(1, min(kappa, 3) + 1):
                for x in range(d.n):
                    cycles = cycles_through_vertex(d, x, k)
                    assert len(cycles) == k
                    for a in range(k):
                        for b in range(a + 1, k):
                            assert set(cycles[a]) & set(cycles[b]) == {x}


class TestEarDecomposition:
    def test_triangle_single_ear(self):
        dec = ear_decomposition_digraph(directed_cycle(3))
        assert dec.ears == ((0, 1, 2, 0),)

    def test_not_strong_rejected(self):
        with pytest.raises(ValueError):
            ear_decomposition_digraph(Digraph(3, frozenset({(0, 1), (1, 0), (1, 2)})))

    def test_start_cycle_respected(self):
        dec = ear_decomposition_digraph(complete_digraph(3), start_cycle=(0, 1))
        assert dec.ears[0] == (0, 1, 0)
        assert not check_ear_decomposition_digraph(complete_digraph(3), dec)

    def test_any_cycle_can_start(self):
        d = complete_digraph(3)
        for cycle in [(0, 1), (0, 2), (1, 2), (0, 1, 2), (0, 2, 1)]:
            dec = ear_decomposition_digraph(d, start_cycle=cycle)
            assert not check_ear_decomposition_digraph(d, dec)

    def test_bad_start_cycle(self):
        with pytest.raises(ValueError):
            ear_decomposition_digraph(directed_cycle(3), start_cycle=(0, 2))

    def test_success_iff_strong_n3(self):
        for d in iter_digraphs(3):
            if is_strong(d) and d.n >= 2:
                dec = ear_decomposition_digraph(d)
                assert not check_ear_decomposition_digraph(d, dec)
                assert dec.arcs() == set(d.arcs)
            else:
                with pytest.raises(ValueError):
                    ear_decomposition_digraph(d)

    def test_rejects_loops(self):
        with pytest.raises(ValueError):
            ear_decomposition_digraph(
                Digraph(2, frozenset({(0, 1), (1, 0), (0, 0)}), loops_allowed=True))


class TestMinimality:
    @pytest.mark.parametrize("n", [2, 3, 5])
    def test_directed_cycle_minimal(self, n):
        assert is_minimal_k_strong(directed_cycle(n), 1).holds

    def test_complete_not_minimal_1_strong(self):
        res = is_minimal_k_strong(complete_digraph(3), 1)
        assert not res.holds and res.witness == (0, 1)

    def test_triangle_not_minimal_2_strong(self):
        res = is_minimal_k_strong(directed_cycle(3), 2)
        assert not res.holds and res.reason == "not 2-strong"

    def test_complete_k_plus_1_is_minimal_k_strong(self):
        assert is_minimal_k_strong(complete_digraph(3), 2).holds


class TestOneWayPairs:
    def test_triangle_passes_k1(self):
        ok, _ = one_way_pair_audit(directed_cycle(3), 1)
        assert ok

    def test_single_arc_fails(self):
        ok, pair = one_way_pair_audit(Digraph(2, frozenset({(0, 1)})), 1)
        assert not ok
        assert pair.x == (1,) and pair.y == (0,) and pair.h == 0

    def test_complete_4_passes_k3(self):
        ok, _ = one_way_pair_audit(complete_digraph(4), 3)
        assert ok

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_matches_k_strong_exhaustive(self, n):
        for d in iter_digraphs(n):
            for k in range(1, n):
                ok, _ = one_way_pair_audit(d, k)
                assert ok == is_k_strong(d, k).holds

    def test_matches_k_strong_random_n6(self):
        for seed in range(20):
            d = random_digraph(6, 0.4, seed=seed)
            for k in range(1, 6):
                ok, _ = one_way_pair_audit(d, k)
                assert ok == is_k_strong(d, k).holds


class TestAntiDirectedTrails:
    def test_pattern_validator(self):
        assert is_anti_directed_trail([(0, 2), (1, 2), (1, 3), (0, 3)])
        assert not is_anti_directed_trail([(0, 2), (1, 2)])
        assert not is_anti_directed_trail([(0, 2), (1, 2), (1, 3)])

    def test_arcless(self):
        assert anti_directed_trail_find(Digraph(3, frozenset()), 0) is None

    def test_shared_head_only(self):
        d = Digraph(3, frozenset({(0, 2), (1, 2)}))
        assert anti_directed_trail_find(d, 0) is None

    def test_four_arc_trail(self):
        d = Digraph(4, frozenset({(0, 2), (1, 2), (1, 3), (0, 3)}))
        trail = anti_directed_trail_find(d, 0)
        assert trail is not None
        assert is_anti_directed_trail(trail)

    def test_degree_threshold_filters(self):
        # all degrees are 2, so k = 2 demands degree 3 and nothing qualifies
        d = Digraph(4, frozenset({(0, 2), (1, 2), (1, 3), (0, 3)}))
        assert anti_directed_trail_find(d, 1) is not None
        assert anti_directed_trail_find(d, 2) is None


class TestDegreeAudit:
    def test_directed_5_cycle(self):
        rep = minimal_k_strong_degree_audit(directed_cycle(5), 1)
        assert rep.ok and rep.out_degree_k_count == 5 and rep.in_degree_k_count == 5

    def test_rejects_non_minimal(self):
        with pytest.raises(ValueError):
            minimal_k_strong_degree_audit(complete_digraph(3), 1)


@st.composite
def digraphs_with_loops(draw):
    n = draw(st.integers(2, 5))
    cells = [(i, j) for i in range(n) for j in range(n) if i != j]
    arcs = set(draw(st.sets(st.sampled_from(cells))))
    loops = draw(st.sets(st.integers(0, n - 1)))
    return (Digraph(n, frozenset(arcs), loops_allowed=False),
            Digraph(n, frozenset(arcs) | {(v, v) for v in loops}, loops_allowed=True))


@given(digraphs_with_loops())
@settings(max_examples=60, deadline=None)
def test_loops_never_change_connectivity(pair):
    plain, loopy = pair
    assert is_strong(plain) == is_strong(loopy)
    assert strong_components(plain) == strong_components(loopy)
    assert vertex_connectivity(plain) == vertex_connectivity(loopy.loop_free())
