import random

from hypothesis import given, settings, strategies as st

from viforge.graphs import Graph, complete_graph, cycle_graph, path_graph, star_graph
from viforge.oracles import (
    oracle_ecp,
    oracle_eqcoloring,
    oracle_precoloring,
    verify_ecp,
    verify_eqcoloring,
    verify_precoloring,
)
from viforge.solvers.coloring import (
    equitable_coloring_vi,
    equitable_connected_partition_vi,
    precoloring_extension_vi,
)

from conftest import BIG_BUDGET, rand_graph, rand_vi_graph


class TestPrecoloring:
    def test_cycle_with_opposite_seeds(self):
        c4 = cycle_graph(4)
        got = precoloring_extension_vi(c4, {0: 1, 2: 1}, 2)
        assert got is not None
        assert verify_precoloring(c4, {0: 1, 2: 1}, 2, got)

    def test_conflicting_seeds(self):
        assert precoloring_extension_vi(Graph(2, {(0, 1)}), {0: 1, 1: 1}, 2) is None

    def test_triangle(self):
        k3 = complete_graph(3)
        got = precoloring_extension_vi(k3, {0: 2}, 3)
        assert got is not None and got[0] == 2
        assert verify_precoloring(k3, {0: 2}, 3, got)
        assert precoloring_extension_vi(k3, {0: 1}, 2) is None

    def test_no_seeds(self):
        p4 = path_graph(4)
        got = precoloring_extension_vi(p4, {}, 2)
        assert got is not None and verify_precoloring(p4, {}, 2, got)

    @given(st.integers(0, 10_000))
    @settings(max_examples=30, deadline=None)
    def test_matches_oracle(self, seed):
        rng = random.Random(seed)
        g = rand_graph(rng, rng.randint(1, 7), p=rng.choice([0.3, 0.5]))
        r = rng.randint(1, 4)
        pre = {}
        for v in rng.sample(range(g.n), min(g.n, rng.randint(0, 2))):
            pre[v] = rng.randint(1, r)
        got = precoloring_extension_vi(g, pre, r)
        want = oracle_precoloring(g, pre, r, budget=BIG_BUDGET)
        assert (got is None) == (want is None)
        if got is not None:
            assert verify_precoloring(g, pre, r, got)


class TestEquitableColoring:
    def test_frozen_values(self):
        got = equitable_coloring_vi(complete_graph(3), 3)
        assert got is not None and verify_eqcoloring(complete_graph(3), 3, got)
        assert equitable_coloring_vi(star_graph(3), 2) is None
        got = equitable_coloring_vi(cycle_graph(4), 2)
        assert got is not None and verify_eqcoloring(cycle_graph(4), 2, got)

    def test_more_classes_than_vertices(self):
        got = equitable_coloring_vi(path_graph(3), 5)
        assert got is not None and verify_eqcoloring(path_graph(3), 5, got)

    @given(st.integers(0, 10_000))
    @settings(max_examples=30, deadline=None)
    def test_matches_oracle(self, seed):
        rng = random.Random(seed)
        g = rand_graph(rng, rng.randint(1, 7), p=rng.choice([0.3, 0.5]))
        r = rng.randint(1, 4)
        got = equitable_coloring_vi(g, r)
        want = oracle_eqcoloring(g, r, budget=BIG_BUDGET)
        assert (got is None) == (want is None)
        if got is not None:
            assert verify_eqcoloring(g, r, got)

    @given(st.integers(0, 10_000))
    @settings(max_examples=15, deadline=None)
    def test_matches_oracle_on_low_integrity_graphs(self, seed):
        rng = random.Random(seed)
        g = rand_vi_graph(rng, rng.randint(4, 8), k=3)
        r = rng.randint(2, 4)
        got = equitable_coloring_vi(g, r)
        want = oracle_eqcoloring(g, r, budget=BIG_BUDGET)
        assert (got is None) == (want is None)
        if got is not None:
            assert verify_eqcoloring(g, r, got)


class TestEquitablePartition:
    def test_path_splits_in_half(self):
        assert equitable_connected_partition_vi(path_graph(4), 2) == [[0, 1], [2, 3]]

    def test_star_cannot_split(self):
        assert equitable_connected_partition_vi(star_graph(3), 2) is None

    def test_star_into_singletons(self):
        got = equitable_connected_partition_vi(star_graph(3), 4)
        assert got is not None and verify_ecp(star_graph(3), 4, got)

    def test_double_star(self):
        # two adjacent centers, three leaves each
        g = Graph(8, {(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7)})
        got = equitable_connected_partition_vi(g, 2)
        assert got == [[0, 2, 3, 4], [1, 5, 6, 7]]

    def test_single_class(self):
        c5 = cycle_graph(5)
        assert equitable_connected_partition_vi(c5, 1) == [[0, 1, 2, 3, 4]]
        two_comps = Graph(4, {(0, 1), (2, 3)})
        assert equitable_connected_partition_vi(two_comps, 1) is None

    @given(st.integers(0, 10_000))
    @settings(max_examples=30, deadline=None)
    def test_matches_oracle(self, seed):
        rng = random.Random(seed)
        g = rand_graph(rng, rng.randint(1, 7), p=rng.choice([0.3, 0.5]))
        r = rng.randint(1, 4)
        got = equitable_connected_partition_vi(g, r)
        want = oracle_ecp(g, r, budget=BIG_BUDGET)
        assert (got is None) == (want is None)
        if got is not None:
            assert verify_ecp(g, r, got)

    @given(st.integers(0, 10_000))
    @settings(max_examples=15, deadline=None)
    def test_matches_oracle_on_low_integrity_graphs(self, seed):
        rng = random.Random(seed)
        g = rand_vi_graph(rng, rng.randint(4, 8), k=3)
        r = rng.randint(2, 4)
        got = equitable_connected_partition_vi(g, r)
        want = oracle_ecp(g, r, budget=BIG_BUDGET)
        assert (got is None) == (want is None)
        if got is not None:
            assert verify_ecp(g, r, got)
