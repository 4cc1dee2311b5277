"""Shared generators and budgets for the test suite."""

import random

from viforge.graphs import Graph, edge_key
from viforge.oracles import OracleBudget

# roomy enough for every non-acceptance test in the suite
BIG_BUDGET = OracleBudget(max_vertices=32, max_edges=40, max_orderings=50000,
                          max_subsets=10 ** 6, max_items=16)


def rand_vi_graph(rng: random.Random, n: int, k: int) -> Graph:
    """Random graph with vertex integrity at most k: a separator of fewer
    than k vertices plus blocks of at most k - |S| vertices each."""
    s = rng.randint(0, min(k - 1, n))
    order = list(range(n))
    rng.shuffle(order)
    sep, rest = order[:s], order[s:]
    edges = set()
    for i in range(s):
        for j in range(i + 1, s):
            if rng.random() < 0.6:
                edges.add(edge_key(sep[i], sep[j]))
    while rest:
        size = rng.randint(1, k - s)
        chunk, rest = rest[:size], rest[size:]
        for i in range(len(chunk)):
            for j in range(i + 1, len(chunk)):
                if rng.random() < 0.7:
                    edges.add(edge_key(chunk[i], chunk[j]))
            for x in sep:
                if rng.random() < 0.5:
                    edges.add(edge_key(chunk[i], x))
    return Graph(n, edges)


def rand_vc_graph(rng: random.Random, n: int, k: int) -> Graph:
    """Random graph whose edges all touch a fixed set of at most k
    vertices, so the vertex cover number is at most k."""
    order = list(range(n))
    rng.shuffle(order)
    s = rng.randint(0, min(k, n))
    edges = set()
    for i in range(s):
        for j in range(i + 1, s):
            if rng.random() < 0.6:
                edges.add(edge_key(order[i], order[j]))
        for v in order[s:]:
            if rng.random() < 0.5:
                edges.add(edge_key(order[i], v))
    return Graph(n, edges)


def rand_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    edges = {
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    }
    return Graph(n, edges)


def with_caps(rng: random.Random, g: Graph, by_degree: bool) -> Graph:
    """Attach random capacities; when by_degree, keep them at most the
    degree (and drop isolated vertices entirely, which cannot carry one)."""
    if by_degree:
        keep = [v for v in range(g.n) if g.degree(v) >= 1]
        sub = {v: i for i, v in enumerate(keep)}
        edges = {(sub[u], sub[v]) for (u, v) in g.edges}
        g = Graph(len(keep), edges)
        caps = {v: rng.randint(1, g.degree(v)) for v in range(g.n)}
    else:
        caps = {v: rng.randint(1, 3) for v in range(g.n)}
    return Graph(g.n, set(g.edges), capacities=caps)


def with_weights(rng: random.Random, g: Graph, hi: int = 9) -> Graph:
    return Graph(g.n, set(g.edges), capacities=g.capacities, colors=g.colors,
                 weights={e: rng.randint(1, hi) for e in g.edges})


def with_colors(rng: random.Random, g: Graph, palette: int) -> Graph:
    return Graph(g.n, set(g.edges), capacities=g.capacities,
                 colors={v: rng.randrange(palette) for v in range(g.n)},
                 weights=g.weights)
