"""Constructions that turn small numeric problems into graph instances
with known parameter guarantees.

Each builder checks the assumptions its correctness argument needs and
raises ReductionInputError when they fail, rather than silently fixing
the input.  The returned metadata names the witness structure the built
instance is guaranteed to carry: a small vertex cover, a one-vertex
separator, or exact size identities.
"""

import math
from dataclasses import dataclass

from .graphs import Graph, edge_key
from .poly import MotifInstance


class ReductionInputError(ValueError):
    """The source instance violates an assumption the construction needs."""


@dataclass(frozen=True)
class BinPackingInstance:
    """Items to pack into t bins, each filled to exactly total/t."""

    items: tuple
    t: int

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(int(a) for a in self.items))
        if not self.items:
            raise ReductionInputError("need at least one item")
        if any(a <= 0 for a in self.items):
            raise ReductionInputError("items must be positive")
        if self.t < 1:
            raise ReductionInputError("need at least one bin")

    @property
    def total(self) -> int:
        return sum(self.items)


@dataclass(frozen=True)
class ThreeDMInstance:
    """Triples over three disjoint coordinate sets of n elements each."""

    n: int
    triples: tuple

    def __post_init__(self):
        if self.n < 0:
            raise ReductionInputError("coordinate range must be non-negative")
        trs = tuple(tuple(int(c) for c in tr) for tr in self.triples)
        object.__setattr__(self, "triples", trs)
        for tr in trs:
            if len(tr) != 3:
                raise ReductionInputError(f"triple {tr} needs 3 coordinates")
            if any(not 0 <= c < self.n for c in tr):
                raise ReductionInputError(f"triple {tr} out of range for n={self.n}")


def _bin_target(bp: BinPackingInstance) -> int:
    if bp.total % bp.t != 0:
        raise ReductionInputError(
            f"total weight {bp.total} is not divisible into {bp.t} bins"
        )
    return bp.total // bp.t


def _orientation_gadget(item_weights, t: int, big: int):
    """Complete bipartite graph {u, s_1..s_t} x {v_1..v_n} plus the extra
    edge (u, s_1) of weight big; hub u is vertex 0, the bin vertices
    follow, the item vertices come last."""
    n = len(item_weights)
    hub = 0
    bins = list(range(1, t + 1))
    item_ids = list(range(t + 1, t + 1 + n))
    edges = set()
    weights = {}

    def add(u, v, w):
        e = edge_key(u, v)
        edges.add(e)
        weights[e] = w

    add(hub, bins[0], big)
    for v, a in zip(item_ids, item_weights):
        add(v, hub, big - a)
        for s in bins:
            add(v, s, a)
    g = Graph(t + 1 + n, edges, weights=weights)
    return g, hub, bins, item_ids


def reduce_bp_to_unary_mmoo(bp: BinPackingInstance, drop_equal_items=False):
    """Bin packing with t >= 3 bins as an orientation question whose
    hub-plus-bins side is a vertex cover of size t + 1.

    The total edge weight equals (#vertices) * W with W = (t-1)B, so a
    feasible orientation must give every vertex outdegree exactly W.
    That pins the hub edges and leaves each item vertex exactly one
    outgoing bin edge; those choices are the packing.  Items equal to
    the bin size B would occupy a bin alone, which the weight argument
    cannot express, so they are rejected unless drop_equal_items removes
    them (together with one bin each).
    """
    if bp.t < 3:
        raise ReductionInputError("need at least 3 bins")
    target = _bin_target(bp)
    items = list(bp.items)
    t = bp.t
    if any(a > target for a in items):
        raise ReductionInputError("an item is larger than the bin size")
    full = sum(1 for a in items if a == target)
    if full and not drop_equal_items:
        raise ReductionInputError("items equal to the bin size are not allowed")
    if full:
        items = [a for a in items if a != target]
        t -= full
        if t < 3 or not items:
            raise ReductionInputError(
                "dropping full-bin items leaves a trivial instance"
            )
    big = (t - 1) * target
    g, hub, bins, item_ids = _orientation_gadget(items, t, big)
    meta = {
        "r": big,
        "bin_target": target,
        "bins": t,
        "vertex_cover": [hub] + bins,
        "hub": hub,
        "bin_vertices": bins,
        "item_vertices": item_ids,
        "kept_items": items,
        "dropped_items": full,
    }
    return g, big, meta


def reduce_partition_to_binary_mmoo(items):
    """Balanced partition as the two-bin orientation gadget.

    Shifting every item by B = total/2 and asking for per-vertex
    outdegree exactly (n/2 + 1)B means only index sets of size exactly
    n/2 can hit the target, so the built instance is orientable at r
    precisely when the items split into two halves of equal size and
    equal sum.  The hub and the two bin vertices cover all edges.
    """
    items = tuple(int(a) for a in items)
    n = len(items)
    if n % 2 != 0 or n < 10:
        raise ReductionInputError("need an even number of items, at least 10")
    if any(a <= 0 for a in items):
        raise ReductionInputError("items must be positive")
    total = sum(items)
    if total % 2 != 0:
        raise ReductionInputError("odd total weight never splits evenly")
    shift = total // 2
    shifted = [a + shift for a in items]
    big = (n // 2 + 1) * shift
    g, hub, bins, item_ids = _orientation_gadget(shifted, 2, big)
    meta = {
        "r": big,
        "shift": shift,
        "shifted_items": shifted,
        "vertex_cover": [hub] + bins,
        "hub": hub,
        "bin_vertices": bins,
        "item_vertices": item_ids,
    }
    return g, big, meta


def reduce_bp_to_bandwidth(bp: BinPackingInstance):
    """Bin packing as a bandwidth question on a tree.

    A spine z_0, x_1, y_1, z_1, ..., x_t, y_t, z_t carries heavy leaf
    loads that force its vertices w positions apart in any layout of
    width w = 6tnB + 2n + 1.  Each item hangs a star of 6tn*a_i - 1
    leaves that must fit between some x_j and y_j, which works exactly
    when the items split into bins of B each.  The connector paths from
    the star centers to x_1 keep the whole graph one tree while being
    long enough to thread through the forced layout.
    """
    if bp.t < 2:
        raise ReductionInputError("need at least 2 bins")
    target = _bin_target(bp)
    t, n = bp.t, len(bp.items)
    width = 6 * t * n * target + 2 * n + 1

    # spine vertex ids: x_i = 3i - 2, y_i = 3i - 1, z_i = 3i
    z = [3 * i for i in range(t + 1)]
    x = [3 * i - 2 for i in range(1, t + 1)]
    y = [3 * i - 1 for i in range(1, t + 1)]
    edges = {(i, i + 1) for i in range(3 * t)}
    nxt = 3 * t + 1

    def attach_leaves(center, count):
        nonlocal nxt
        for _ in range(count):
            edges.add(edge_key(center, nxt))
            nxt += 1

    inner_load = 12 * t * n * target
    end_load = inner_load + 4 * n + 1
    attach_leaves(z[0], end_load)
    for i in range(1, t):
        attach_leaves(z[i], inner_load)
    attach_leaves(z[t], end_load)

    centers = []
    for a in bp.items:
        v = nxt
        nxt += 1
        centers.append(v)
        attach_leaves(v, 6 * t * n * a - 1)
        prev = v
        for _ in range(6 * t - 4):
            edges.add(edge_key(prev, nxt))
            prev = nxt
            nxt += 1
        edges.add(edge_key(prev, x[0]))

    tree = Graph(nxt, edges)
    meta = {
        "width": width,
        "n_vertices": nxt,
        "z_vertices": z,
        "x_vertices": x,
        "y_vertices": y,
        "item_centers": centers,
        "inner_leaf_count": inner_load,
        "end_leaf_count": end_load,
        "connector_inner_count": 6 * t - 4,
        "treedepth_bound": 2 + math.ceil(math.log2(6 * t - 2)),
    }
    return tree, width, meta


def reduce_3dm_to_colorful_motif(tdm: ThreeDMInstance):
    """Perfect three-dimensional matchings as colorful motif occurrences.

    A root of its own color hangs one three-vertex path per triple,
    colored by the triple's coordinates.  Asking for every color exactly
    once forces n full root-disjoint paths with pairwise distinct
    coordinates, i.e. a perfect matching.  Deleting the root leaves only
    paths of order 3, so {root} witnesses small integrity.
    """
    n = tdm.n
    root = 0
    colors = {root: 0}
    edges = set()
    paths = []
    nxt = 1
    for (xi, yj, zk) in tdm.triples:
        a, b, c = nxt, nxt + 1, nxt + 2
        nxt += 3
        colors[a] = 1 + xi
        colors[b] = 1 + n + yj
        colors[c] = 1 + 2 * n + zk
        edges |= {(root, a), (a, b), (b, c)}
        paths.append([a, b, c])
    g = Graph(nxt, edges, colors=colors)
    motif = {c: 1 for c in range(3 * n + 1)}
    meta = {
        "root": root,
        "separator": [root],
        "integrity_bound": 1 + (3 if tdm.triples else 0),
        "motif_size": 3 * n + 1,
        "triple_paths": paths,
    }
    return MotifInstance(g, motif), meta
