"""Maximum common subgraph and common induced subgraph solvers.

Both graphs get a separator whose removal leaves small components.  A
common subgraph is split into the part living on the separators plus an
anchor set on each side (guessed, together with the bijection between
them) and piece fragments inside the small components.  Fragments are
grouped by their anchored type, so the per-side choice reduces to "how
many components realise each decomposition", which an integer program
matches across the two sides.

The guessed anchor data is deduplicated per side before sides are
combined: a guess only matters through its anchor adjacency bits and
the multiset of component type codes, so each distinct (bits, codes)
key is solved once and keeps one concrete witness for reconstruction.
"""

from collections import Counter
from itertools import combinations, permutations

from ..graphs import components, induced
from ..ilp import IlpInstance, optimize
from ..integrity import vertex_integrity
from ..typesys import classify_detailed, enumerate_decompositions, g_type_of

# (type code, induced flag) -> {piece-code multiset: (edge total, vertex total, Counter)}
_DECOMP_CACHE = {}
# (codes1, codes2, induced flag) -> optimal piece total
_OPT_CACHE = {}


def _decomp_summary(code, h, rho, comp, induced_flag):
    got = _DECOMP_CACHE.get((code, induced_flag))
    if got is None:
        raw = enumerate_decompositions(h, rho, comp, induced_mode=induced_flag)
        got = {}
        for t_key, pieces in raw.items():
            edges = sum(len(f) + len(b) for (_, f, b) in pieces)
            verts = sum(len(vs) for (vs, _, _) in pieces)
            got[t_key] = (edges, verts, Counter(t_key))
        _DECOMP_CACHE[(code, induced_flag)] = got
    return got


def _anchor_bits(h, rho):
    bits = 0
    pos = 0
    for i in range(len(rho)):
        for j in range(i + 1, len(rho)):
            if h.has_edge(rho[i], rho[j]):
                bits |= 1 << pos
            pos += 1
    return bits


def _side_keys(g, sep, z_max, ordered, induced_flag, two_k):
    """Deduplicated anchor guesses for one side.

    A guess keeps X, Y inside the separator (the rest of the separator
    is deleted), and an anchor extension Z among the remaining vertices.
    The anchor order is sorted X + sorted Y + sorted Z when ``ordered``
    is false; otherwise all segment orders are produced, because the
    second side's anchor order encodes the bijection with the first.

    Returns {(sizes, bits, codes): (kept vertices, anchor order)} in
    the labels of g.
    """
    table = {}
    sep = sorted(sep)
    rest = [v for v in range(g.n) if v not in set(sep)]
    for x_size in range(len(sep) + 1):
        for x_set in combinations(sep, x_size):
            left = [v for v in sep if v not in set(x_set)]
            for y_size in range(len(left) + 1):
                for y_set in combinations(left, y_size):
                    kept = tuple(sorted(set(rest) | set(x_set) | set(y_set)))
                    h, o2n = induced(g, list(kept))
                    xh = [o2n[v] for v in x_set]
                    yh = [o2n[v] for v in y_set]
                    anchored = set(xh) | set(yh)
                    free = [v for v in range(h.n) if v not in anchored]
                    n2o = {n: o for o, n in o2n.items()}
                    for z_size in range(min(z_max, len(free)) + 1):
                        for z_set in combinations(free, z_size):
                            r_set = anchored | set(z_set)
                            comps = components(h, r_set)
                            if any(len(r_set) + len(c) > two_k for c in comps):
                                continue
                            if ordered:
                                rhos = [
                                    bx + bz + bw
                                    for bx in permutations(xh)
                                    for bz in permutations(z_set)
                                    for bw in permutations(yh)
                                ]
                            else:
                                rhos = [tuple(xh) + tuple(yh) + tuple(z_set)]
                            # second side orders anchors as X, Z, Y so the
                            # segment lengths line up with side one's X, Y, Z
                            if ordered:
                                sizes = (len(xh), len(z_set), len(yh))
                            else:
                                sizes = (len(xh), len(yh), len(z_set))
                            for rho in rhos:
                                bits = _anchor_bits(h, rho)
                                codes = []
                                for t, cs in classify_detailed(h, list(rho)):
                                    _decomp_summary(t.code, h, list(rho), cs[0], induced_flag)
                                    codes.extend([t.code] * len(cs))
                                key = (sizes, bits, tuple(sorted(codes)))
                                if key not in table:
                                    table[key] = (kept, tuple(n2o[v] for v in rho))
    return table


def _prune_columns(cols1, cols2):
    """Drop decompositions using piece codes absent from the other side."""
    while True:
        avail1 = set().union(*(set(gam) for (_, _, _, _, gam) in cols1)) if cols1 else set()
        avail2 = set().union(*(set(gam) for (_, _, _, _, gam) in cols2)) if cols2 else set()
        n1 = [c for c in cols1 if set(c[4]) <= avail2]
        n2 = [c for c in cols2 if set(c[4]) <= avail1]
        if len(n1) == len(cols1) and len(n2) == len(cols2):
            return n1, n2
        cols1, cols2 = n1, n2


def _piece_ilp(codes1, codes2, induced_flag):
    """Match piece decompositions across the sides.

    Returns (optimal total, side-1 columns, side-2 columns, point) where
    a column is (type code, decomposition key, count bound).  Piece
    totals are edge counts for common subgraphs and vertex counts for
    the induced variant.
    """
    cols = ([], [])
    for side, codes in enumerate((codes1, codes2)):
        for code, cnt in sorted(Counter(codes).items()):
            for t_key, (edges, verts, gam) in sorted(_DECOMP_CACHE[(code, induced_flag)].items()):
                weight = verts if induced_flag else edges
                cols[side].append((code, t_key, cnt, weight, gam))
    cols1, cols2 = _prune_columns(cols[0], cols[1])

    p = len(cols1) + len(cols2)
    bounds = [(0, c[2]) for c in cols1] + [(0, c[2]) for c in cols2]
    constraints = []
    for side, colset, codes in ((0, cols1, codes1), (1, cols2, codes2)):
        offset = 0 if side == 0 else len(cols1)
        for code, cnt in sorted(Counter(codes).items()):
            row = [0] * p
            hit = False
            for i, c in enumerate(colset):
                if c[0] == code:
                    row[offset + i] = 1
                    hit = True
            if not hit:
                # every decomposition of this type was pruned away, which
                # cannot happen: the empty decomposition survives pruning
                raise RuntimeError("type lost all decompositions")
            constraints.append((tuple(row), "==", cnt))
    gammas = sorted(set().union(*(set(c[4]) for c in cols1)) if cols1 else set())
    for gamma in gammas:
        row = [c[4].get(gamma, 0) for c in cols1]
        row += [-c[4].get(gamma, 0) for c in cols2]
        constraints.append((tuple(row), "==", 0))
    obj = [c[3] for c in cols1] + [0] * len(cols2)

    inst = IlpInstance(tuple(bounds), tuple(constraints), (tuple(obj), "max"))
    got = optimize(inst)
    if got is None:
        raise RuntimeError("piece matching must always admit the empty choice")
    point, value = got
    return value, cols1, cols2, point


def _match_piece(rho1, piece1, rho2, piece2):
    """Concrete map of one piece onto a code-equal piece of the other side."""
    vs1, f1, b1 = piece1
    vs2, f2, b2 = piece2
    idx1 = {r: i for i, r in enumerate(rho1)}
    idx2 = {r: i for i, r in enumerate(rho2)}

    def profile(vs, f, b, idx):
        adj = {v: set() for v in vs}
        for (u, v) in f:
            adj[u].add(v)
            adj[v].add(u)
        link = {v: 0 for v in vs}
        for (v, r) in b:
            link[v] |= 1 << idx[r]
        return adj, link

    adj1, link1 = profile(vs1, f1, b1, idx1)
    adj2, link2 = profile(vs2, f2, b2, idx2)
    order = sorted(vs1)
    cand = sorted(vs2)
    mapping = {}
    used = set()

    def extend(i):
        if i == len(order):
            return True
        u = order[i]
        for x in cand:
            if x in used or link1[u] != link2[x] or len(adj1[u]) != len(adj2[x]):
                continue
            if any((w in adj1[u]) != (img in adj2[x]) for w, img in mapping.items()):
                continue
            mapping[u] = x
            used.add(x)
            if extend(i + 1):
                return True
            del mapping[u]
            used.discard(x)
        return False

    if not extend(0):
        raise RuntimeError("code-equal pieces must admit an anchored match")
    return mapping


def _assigned_pieces(h, rho, cols, point, offset, induced_flag):
    """Concrete pieces realising the chosen decomposition counts."""
    groups = {t.code: list(cs) for t, cs in classify_detailed(h, list(rho))}
    pieces = []
    for i, (code, t_key, _, _, _) in enumerate(cols):
        for _ in range(point[offset + i]):
            comp = groups[code].pop()
            decs = enumerate_decompositions(h, list(rho), comp, induced_mode=induced_flag)
            for (vs, f, b) in decs[t_key]:
                pcode = g_type_of(h, list(rho), vs, b, f).code
                pieces.append((pcode, (vs, f, b)))
    return pieces


def _reconstruct(g1, g2, wit1, wit2, codes1, codes2, induced_flag):
    kept1, rho1_orig = wit1
    kept2, rho2_orig = wit2
    h1, o2n1 = induced(g1, list(kept1))
    h2, o2n2 = induced(g2, list(kept2))
    rho1 = tuple(o2n1[v] for v in rho1_orig)
    rho2 = tuple(o2n2[v] for v in rho2_orig)

    _, cols1, cols2, point = _piece_ilp(codes1, codes2, induced_flag)
    pieces1 = _assigned_pieces(h1, rho1, cols1, point, 0, induced_flag)
    pieces2 = _assigned_pieces(h2, rho2, cols2, point, len(cols1), induced_flag)
    pieces1.sort(key=lambda pc: pc[0])
    pieces2.sort(key=lambda pc: pc[0])

    mapping = {rho1[i]: rho2[i] for i in range(len(rho1))}
    for (c1, p1), (c2, p2) in zip(pieces1, pieces2):
        if c1 != c2:
            raise RuntimeError("piece code mismatch in matched solution")
        mapping.update(_match_piece(rho1, p1, rho2, p2))

    n2o1 = {n: o for o, n in o2n1.items()}
    n2o2 = {n: o for o, n in o2n2.items()}
    return {n2o1[u]: n2o2[x] for u, x in mapping.items()}


def _common_solve(g1, g2, induced_flag):
    g1.validate()
    g2.validate()
    if g1.n == 0 or g2.n == 0:
        return 0, {}
    k1, vis1 = vertex_integrity(g1)
    k2, vis2 = vertex_integrity(g2)
    two_k = 2 * max(k1, k2)
    s1 = sorted(vis1.separator)
    s2 = sorted(vis2.separator)

    side1 = _side_keys(g1, s1, len(s2), False, induced_flag, two_k)
    side2 = _side_keys(g2, s2, len(s1), True, induced_flag, two_k)

    by_sizes = {}
    for key2, wit2 in side2.items():
        by_sizes.setdefault(key2[0], []).append((key2, wit2))

    best = None
    for (sizes1, bits1, codes1), wit1 in side1.items():
        for (sizes2, bits2, codes2), wit2 in by_sizes.get(sizes1, ()):
            if induced_flag:
                if bits1 != bits2:
                    continue
                base = sizes1[0] + sizes1[1] + sizes1[2]
            else:
                base = bin(bits1 & bits2).count("1")
            cache_key = (codes1, codes2, induced_flag)
            opt = _OPT_CACHE.get(cache_key)
            if opt is None:
                opt = _piece_ilp(codes1, codes2, induced_flag)[0]
                _OPT_CACHE[cache_key] = opt
            val = base + opt
            if best is None or val > best[0]:
                best = (val, wit1, wit2, codes1, codes2)

    value, wit1, wit2, codes1, codes2 = best
    mapping = _reconstruct(g1, g2, wit1, wit2, codes1, codes2, induced_flag)
    return value, mapping


def mcs_vi(g1, g2):
    """Largest edge count of a common subgraph, with a vertex mapping
    realising it."""
    return _common_solve(g1, g2, False)


def mcis_vi(g1, g2):
    """Largest vertex count of a common induced subgraph, with a vertex
    mapping realising it."""
    return _common_solve(g1, g2, True)
