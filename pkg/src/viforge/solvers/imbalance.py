"""Minimum imbalance orderings for graphs with a small separator.

The imbalance of a vertex ordering is the sum over all vertices of
|left neighbours - right neighbours|.  After fixing a separator S whose
removal leaves only small components, every ordering splits into an
ordering of S plus, per component, a placement of its vertices into the
gaps between separator vertices.  Components of the same anchored type
admit the same placements, so placements are enumerated once per type,
collapsed to their cost signature, and the number of components using
each signature is chosen by an integer program.
"""

from itertools import combinations_with_replacement, permutations

from ..graphs import anchored_isomorphic, induced
from ..ilp import IlpInstance, optimize
from ..integrity import vertex_integrity
from ..typesys import classify_detailed


def imbalance_of(g, ordering):
    """Total imbalance of ``ordering``.

    Raises ValueError when the ordering is not a permutation of the
    vertices of g.
    """
    order = list(ordering)
    if sorted(order) != list(range(g.n)):
        raise ValueError("ordering must be a permutation of the vertices")
    pos = {v: i for i, v in enumerate(order)}
    total = 0
    for v in range(g.n):
        left = sum(1 for u in g.neighbors(v) if pos[u] < pos[v])
        total += abs(2 * left - g.degree(v))
    return total


def _placements(g, sigma, comp):
    """Cost signatures of all ways to interleave one component with sigma.

    A placement is an order pi of the component vertices plus a
    non-decreasing gap index per vertex (gap j sits right before
    sigma[j], gap len(sigma) is the tail).  Returns
    {(im, l_vec): (pi, gaps)} where im is the imbalance contributed by
    the component vertices and l_vec[j] counts neighbours of sigma[j]
    inside the component placed before sigma[j].
    """
    s_pos = {v: i for i, v in enumerate(sigma)}
    out = {}
    for pi in permutations(comp):
        for gaps in combinations_with_replacement(range(len(sigma) + 1), len(comp)):
            # realise the joint ordering of sigma and the component
            joint = []
            it = 0
            for j in range(len(sigma) + 1):
                while it < len(pi) and gaps[it] == j:
                    joint.append(pi[it])
                    it += 1
                if j < len(sigma):
                    joint.append(sigma[j])
            pos = {v: i for i, v in enumerate(joint)}
            im = 0
            for v in comp:
                left = sum(1 for u in g.neighbors(v) if pos[u] < pos[v])
                im += abs(2 * left - g.degree(v))
            l_vec = tuple(
                sum(1 for u in g.neighbors(s) if u in pos and u not in s_pos and pos[u] < pos[s])
                for s in sigma
            )
            sig = (im, l_vec)
            if sig not in out:
                out[sig] = (pi, gaps)
    return out


def _component_iso(g, sigma, rep, comp):
    """Separator-fixing isomorphism from component rep onto comp.

    Imbalance only depends on adjacency, so components are classified in
    plain mode and decorations must not constrain the map either.
    """
    sub1, map1 = induced(g, list(sigma) + rep)
    sub2, map2 = induced(g, list(sigma) + comp)
    iso = anchored_isomorphic(
        sub1, sub2, [map1[s] for s in sigma], [map2[s] for s in sigma],
        respect_capacities=False, respect_colors=False,
    )
    if iso is None:
        raise RuntimeError("components of equal type must be isomorphic")
    back = {x: v for v, x in map2.items()}
    return {v: back[iso[map1[v]]] for v in rep}


def _solve_for_order(g, sigma):
    groups = classify_detailed(g, sigma)
    sig_lists = []  # per group: [(signature, witness)] in stable order
    for (_, comps) in groups:
        placed = _placements(g, sigma, comps[0])
        sig_lists.append(sorted(placed.items()))

    n_x = sum(len(sl) for sl in sig_lists)
    n_y = len(sigma)
    bounds = []
    for (_, comps), sl in zip(groups, sig_lists):
        bounds.extend([(0, len(comps))] * len(sl))
    bounds.extend([(0, g.n)] * n_y)

    constraints = []
    col = 0
    col_of_group = []
    for (_, comps), sl in zip(groups, sig_lists):
        row = [0] * (n_x + n_y)
        for i in range(len(sl)):
            row[col + i] = 1
        constraints.append((tuple(row), "==", len(comps)))
        col_of_group.append(col)
        col += len(sl)

    s_pos = {v: i for i, v in enumerate(sigma)}
    for j, s in enumerate(sigma):
        base_l = sum(1 for u in g.neighbors(s) if u in s_pos and s_pos[u] < j)
        base_r = sum(1 for u in g.neighbors(s) if u in s_pos and s_pos[u] > j)
        diff = [0] * (n_x + n_y)
        col = 0
        for (_, comps), sl in zip(groups, sig_lists):
            in_comp = sum(1 for u in g.neighbors(s) if u in set(comps[0]))
            for i, ((im, l_vec), _) in enumerate(sl):
                diff[col + i] = 2 * l_vec[j] - in_comp
            col += len(sl)
        d0 = base_l - base_r
        # y_j >= d0 + sum(diff * x) and y_j >= -(d0 + sum(diff * x))
        row1 = [-c for c in diff]
        row1[n_x + j] = 1
        constraints.append((tuple(row1), ">=", d0))
        row2 = list(diff)
        row2[n_x + j] = 1
        constraints.append((tuple(row2), ">=", -d0))

    obj = [0] * (n_x + n_y)
    col = 0
    for sl in sig_lists:
        for i, ((im, _), _) in enumerate(sl):
            obj[col + i] = im
        col += len(sl)
    for j in range(n_y):
        obj[n_x + j] = 1

    inst = IlpInstance(tuple(bounds), tuple(constraints), (tuple(obj), "min"))
    got = optimize(inst)
    if got is None:
        return None
    point, _ = got

    # distribute the components of each group over its chosen signatures
    buckets = [[] for _ in range(len(sigma) + 1)]
    for gi, ((_, comps), sl) in enumerate(zip(groups, sig_lists)):
        counts = list(point[col_of_group[gi]:col_of_group[gi] + len(sl)])
        ci = 0
        for (sig, (pi, gaps)), cnt in zip(sl, counts):
            for _ in range(cnt):
                comp = comps[ci]
                ci += 1
                if comp == comps[0]:
                    placed = list(pi)
                else:
                    phi = _component_iso(g, sigma, comps[0], comp)
                    placed = [phi[v] for v in pi]
                for v, gp in zip(placed, gaps):
                    buckets[gp].append(v)

    ordering = []
    for j in range(len(sigma) + 1):
        ordering.extend(buckets[j])
        if j < len(sigma):
            ordering.append(sigma[j])
    return imbalance_of(g, ordering), ordering


def imbalance_vi(g):
    """Minimum imbalance of g and an ordering attaining it."""
    g.validate()
    if g.n == 0:
        return 0, []
    _, vis = vertex_integrity(g)
    sep = sorted(vis.separator)
    best = None
    for sigma in permutations(sep):
        got = _solve_for_order(g, list(sigma))
        if got is not None and (best is None or got[0] < best[0]):
            best = got
    return best
