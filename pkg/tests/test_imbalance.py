import random

from hypothesis import given, settings, strategies as st

from viforge.graphs import Graph, complete_graph, cycle_graph, path_graph, star_graph
from viforge.oracles import oracle_imbalance, verify_imbalance
from viforge.solvers.imbalance import imbalance_of, imbalance_vi

from conftest import BIG_BUDGET, rand_graph, rand_vi_graph


def test_frozen_values():
    cases = [
        (path_graph(3), 2),
        (star_graph(3), 4),
        (cycle_graph(4), 4),
        (Graph(4), 0),
        (Graph(2, {(0, 1)}), 2),
    ]
    for g, want in cases:
        val, ordering = imbalance_vi(g)
        assert val == want
        assert verify_imbalance(g, ordering, val)


def test_decorations_are_inert():
    # same-shape components with different colors must still map onto
    # each other; imbalance reads adjacency only
    g = Graph(4, {(0, 1), (0, 2), (0, 3)},
              capacities={0: 3, 1: 1, 2: 1, 3: 1},
              colors={0: 0, 1: 1, 2: 2, 3: 0},
              weights={(0, 1): 5, (0, 2): 1, (0, 3): 2})
    val, ordering = imbalance_vi(g)
    assert val == 4
    assert verify_imbalance(g, ordering, val)


def test_ordering_cost_helper():
    p3 = path_graph(3)
    assert imbalance_of(p3, [0, 1, 2]) == 2
    assert imbalance_of(p3, [1, 0, 2]) == 4


def test_empty_graph():
    assert imbalance_vi(Graph(0)) == (0, [])


def test_complete_graphs():
    for n in range(2, 6):
        val, ordering = imbalance_vi(complete_graph(n))
        want, _ = oracle_imbalance(complete_graph(n))
        assert val == want


@given(st.integers(0, 10_000))
@settings(max_examples=40, deadline=None)
def test_matches_oracle_on_random_graphs(seed):
    rng = random.Random(seed)
    g = rand_graph(rng, rng.randint(1, 7), p=rng.choice([0.2, 0.4, 0.6]))
    val, ordering = imbalance_vi(g)
    want, _ = oracle_imbalance(g, budget=BIG_BUDGET)
    assert val == want
    assert verify_imbalance(g, ordering, val)


@given(st.integers(0, 10_000))
@settings(max_examples=25, deadline=None)
def test_matches_oracle_on_low_integrity_graphs(seed):
    rng = random.Random(seed)
    g = rand_vi_graph(rng, rng.randint(4, 8), k=rng.randint(2, 4))
    val, ordering = imbalance_vi(g)
    want, _ = oracle_imbalance(g, budget=BIG_BUDGET)
    assert val == want
    assert verify_imbalance(g, ordering, val)
