"""Colouring problems on graphs with a small separator.

Three solvers share the same skeleton: fix a separator S, guess the
solution's behaviour on S, and handle the components of G - S either
by direct backtracking (precolouring extension) or by collapsing
per-component choices to count vectors matched up with an integer
program (the equitable variants).
"""

from itertools import combinations, product
from math import ceil

from ..graphs import anchored_isomorphic, components, induced, is_connected_subset
from ..ilp import IlpInstance, feasible
from ..integrity import vertex_integrity
from ..typesys import classify_detailed, labelled_code


def _component_iso(g, s_list, rep, comp):
    """Separator-fixing isomorphism of rep onto comp (plain types)."""
    sub1, m1 = induced(g, list(s_list) + rep)
    sub2, m2 = induced(g, list(s_list) + comp)
    iso = anchored_isomorphic(
        sub1, sub2, [m1[s] for s in s_list], [m2[s] for s in s_list],
        respect_capacities=False, respect_colors=False,
    )
    if iso is None:
        raise RuntimeError("components of equal type must be isomorphic")
    back = {x: v for v, x in m2.items()}
    return {v: back[iso[m1[v]]] for v in rep}


# ------------------------------------------------------- precolouring


def _extend_component(g, comp, lists, col):
    """Backtracking list colouring of one component given fixed neighbours."""
    order = sorted(comp)

    def walk(i):
        if i == len(order):
            return True
        v = order[i]
        for c in lists[v]:
            if any(col.get(u) == c for u in g.neighbors(v)):
                continue
            col[v] = c
            if walk(i + 1):
                return True
            del col[v]
        return False

    return walk(0)


def precoloring_extension_vi(g, precolored, r):
    """Proper colouring with colours 1..r extending ``precolored``.

    Returns a full colouring dict or None.  Precoloured vertices keep
    their colour; a precolour above r makes the instance infeasible.
    """
    g.validate()
    if r < 0:
        raise ValueError("number of colours must be non-negative")
    for v, c in precolored.items():
        if not (0 <= v < g.n):
            raise ValueError(f"precoloured vertex {v} out of range")
        if int(c) < 1:
            raise ValueError("colours are positive integers")
    if any(c > r for c in precolored.values()):
        return None
    for (u, v) in g.edges:
        if u in precolored and v in precolored and precolored[u] == precolored[v]:
            return None
    if g.n == 0:
        return {}

    k, vis = vertex_integrity(g)
    s_set = set(vis.separator)
    u_set = set(precolored)

    lists = {}
    for v in range(g.n):
        if v in u_set:
            continue
        forb = {precolored[u] for u in g.neighbors(v) if u in u_set}
        top = r if v in s_set else min(r, k)
        lists[v] = [c for c in range(1, top + 1) if c not in forb]

    # separator vertices with many allowed colours can always be coloured
    # last: fewer than 2k colours are ever blocked around them
    dropped = [v for v in sorted(s_set) if v not in u_set and len(lists[v]) >= 2 * k]
    alive = [v for v in sorted(s_set) if v not in u_set and v not in set(dropped)]
    removed = u_set | set(dropped)
    comps = components(g, removed | set(alive))

    for picks in product(*[lists[v] for v in alive]):
        col = dict(zip(alive, picks))
        if any(
            g.has_edge(a, b) and col[a] == col[b]
            for i, a in enumerate(alive)
            for b in alive[i + 1:]
        ):
            continue
        ok = True
        for comp in comps:
            if not _extend_component(g, comp, lists, col):
                ok = False
                break
        if not ok:
            continue
        col.update(precolored)
        for v in reversed(dropped):
            taken = {col[u] for u in g.neighbors(v) if u in col}
            free = [c for c in lists[v] if c not in taken]
            if not free:
                raise RuntimeError("delayed separator vertex ran out of colours")
            col[v] = free[0]
        return col
    return None


# -------------------------------------------------- equitable colouring


def _class_targets(n, r, big):
    lo = n // r
    return [lo + 1 if i < big else lo for i in range(r)]


def _eqcol_vectors(g, s_list, assign, comp, classes, free_class):
    """Count vectors of proper class assignments for one component.

    ``assign`` maps separator vertices to their class; ``classes`` are
    the class labels a component vertex may take, ``free_class`` an
    optional extra label without any constraint (vertices deferred to
    the spare colours).  Returns {vector: witness μ}.
    """
    comp = sorted(comp)
    out = {}
    labels = list(classes) + ([free_class] if free_class is not None else [])
    for mu in product(labels, repeat=len(comp)):
        ok = True
        for v, c in zip(comp, mu):
            if free_class is not None and c == free_class:
                continue
            for u in g.neighbors(v):
                if u in assign and assign[u] == c:
                    ok = False
                    break
                if u in set(comp) and mu[comp.index(u)] == c:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        vec = tuple(sum(1 for c in mu if c == cls) for cls in classes)
        if vec not in out:
            out[vec] = dict(zip(comp, mu))
    return out


def _match_vectors(groups, vec_maps, counts_rhs):
    """Pick per-type vector multiplicities meeting exact class counts.

    Returns (per-group list of (vector, witness, multiplicity)) or None.
    """
    n_x = sum(len(vm) for vm in vec_maps)
    bounds = []
    constraints = []
    col = 0
    group_cols = []
    for (_, comps), vm in zip(groups, vec_maps):
        row = [0] * n_x
        for i in range(len(vm)):
            row[col + i] = 1
        constraints.append((tuple(row), "==", len(comps)))
        bounds.extend([(0, len(comps))] * len(vm))
        group_cols.append(col)
        col += len(vm)
    n_classes = len(counts_rhs)
    for j in range(n_classes):
        row = []
        for vm in vec_maps:
            row.extend(vec[j] for (vec, _) in vm)
        constraints.append((tuple(row), "==", counts_rhs[j]))

    point = feasible(IlpInstance(tuple(bounds), tuple(constraints)))
    if point is None:
        return None
    chosen = []
    for gi, vm in enumerate(vec_maps):
        part = []
        for i, (vec, wit) in enumerate(vm):
            cnt = point[group_cols[gi] + i]
            if cnt:
                part.append((vec, wit, cnt))
        chosen.append(part)
    return chosen


def _distribute(g, s_list, groups, chosen):
    """Concrete per-vertex classes from chosen vector multiplicities."""
    out = {}
    for (t, comps), part in zip(groups, chosen):
        ci = 0
        for (_, wit, cnt) in part:
            for _ in range(cnt):
                comp = comps[ci]
                ci += 1
                if comp == comps[0]:
                    out.update(wit)
                else:
                    phi = _component_iso(g, s_list, comps[0], comp)
                    out.update({phi[v]: c for v, c in wit.items()})
    return out


def equitable_coloring_vi(g, r):
    """Proper colouring with colours 1..r whose class sizes differ by at
    most one, or None."""
    g.validate()
    if r < 1:
        raise ValueError("need at least one colour")
    n = g.n
    if n == 0:
        return {}
    k, vis = vertex_integrity(g)
    s_list = sorted(vis.separator)
    b = n % r
    groups = classify_detailed(g, s_list)

    if r <= 2 * k:
        targets = _class_targets(n, r, b)
        for picks in product(range(1, r + 1), repeat=len(s_list)):
            assign = dict(zip(s_list, picks))
            if any(
                g.has_edge(u, v) and assign[u] == assign[v]
                for i, u in enumerate(s_list)
                for v in s_list[i + 1:]
            ):
                continue
            rhs = [
                targets[i] - sum(1 for v in s_list if assign[v] == i + 1)
                for i in range(r)
            ]
            if any(x < 0 for x in rhs):
                continue
            vec_maps = [
                sorted(_eqcol_vectors(g, s_list, assign, cs[0], range(1, r + 1), None).items())
                for (_, cs) in groups
            ]
            chosen = _match_vectors(groups, vec_maps, rhs)
            if chosen is None:
                continue
            col = dict(assign)
            col.update(_distribute(g, s_list, groups, chosen))
            return col
        return None

    # more colours than twice the separator budget: only colours 1..k may
    # touch the separator, the rest are filled round-robin at the end
    spare = r - k
    for picks in product(range(1, k + 1), repeat=len(s_list)):
        assign = dict(zip(s_list, picks))
        if any(
            g.has_edge(u, v) and assign[u] == assign[v]
            for i, u in enumerate(s_list)
            for v in s_list[i + 1:]
        ):
            continue
        vec_maps = [
            sorted(_eqcol_vectors(g, s_list, assign, cs[0], range(1, k + 1), 0).items())
            for (_, cs) in groups
        ]
        for big in range(max(0, b - spare), min(k, b) + 1):
            targets = _class_targets(n, r, 0)
            head = [n // r + (1 if i < big else 0) for i in range(k)]
            rhs = [
                head[i] - sum(1 for v in s_list if assign[v] == i + 1)
                for i in range(k)
            ]
            if any(x < 0 for x in rhs):
                continue
            chosen = _match_vectors(groups, vec_maps, rhs)
            if chosen is None:
                continue
            col = dict(assign)
            classed = _distribute(g, s_list, groups, chosen)
            leftovers = []
            for comp in components(g, set(s_list)):
                leftovers.extend(v for v in comp if classed.get(v, 0) == 0)
            col.update({v: c for v, c in classed.items() if c != 0})
            for i, v in enumerate(leftovers):
                col[v] = k + 1 + (i % spare)
            _check_equitable(g, r, col)
            return col
    return None


def _check_equitable(g, r, col):
    sizes = [0] * r
    for v in range(g.n):
        sizes[col[v] - 1] += 1
    lo = g.n // r
    big = g.n % r
    if sorted(sizes, reverse=True) != [lo + 1] * big + [lo] * (r - big):
        raise RuntimeError("colour classes are not balanced")
    for (u, v) in g.edges:
        if col[u] == col[v]:
            raise RuntimeError("colouring is not proper")


# ------------------------------------- equitable connected partition


def _connected_sets(g, allowed, size, anchor=None, meets=None):
    """Connected subsets of ``allowed`` with ``size`` vertices; each must
    contain ``anchor`` (when given) and intersect ``meets`` (when given)."""
    out = []
    pool = sorted(allowed)
    for pick in combinations(pool, size):
        if anchor is not None and anchor not in pick:
            continue
        if meets is not None and not (set(pick) & meets):
            continue
        if is_connected_subset(g, pick):
            out.append(set(pick))
    return out


def _sized_partition(g, region, sizes):
    """Partition of ``region`` into connected parts of the given sizes,
    or None.  ``sizes`` is a descending list."""
    region = set(region)
    if not region:
        return [] if not sizes else None
    if not sizes:
        return None
    v = min(region)
    tried = set()
    for i, s in enumerate(sizes):
        if s in tried:
            continue
        tried.add(s)
        rest_sizes = sizes[:i] + sizes[i + 1:]
        for part in _connected_sets(g, region, s, anchor=v):
            sub = _sized_partition(g, region - part, rest_sizes)
            if sub is not None:
                return [(s, part)] + sub
    return None


def _ecp_small(g, r):
    """Exhaustive search used when parts are no larger than the separator
    budget: grow the part containing the smallest unassigned vertex."""
    n = g.n
    lo, big = n // r, n % r
    sizes = [lo + 1] * big + [lo] * (r - big)
    got = _sized_partition(g, range(n), sizes)
    if got is None:
        return None
    bigs = sorted((sorted(p) for (s, p) in got if s == lo + 1))
    smalls = sorted((sorted(p) for (s, p) in got if s == lo))
    return bigs + smalls


def _ecp_separator_parts(g, s_list, sizes):
    """All ways to pick disjoint connected parts of the given sizes, each
    meeting the separator; equal sizes are kept in min-vertex order."""
    s_set = set(s_list)

    def walk(i, used, acc):
        if i == len(sizes):
            if s_set <= used:
                yield list(acc)
            return
        allowed = set(range(g.n)) - used
        for part in _connected_sets(g, allowed, sizes[i], meets=s_set - used):
            if i > 0 and sizes[i - 1] == sizes[i] and min(part) < min(acc[-1]):
                continue
            acc.append(part)
            yield from walk(i + 1, used | part, acc)
            acc.pop()

    yield from walk(0, set(), [])


def equitable_connected_partition_vi(g, r):
    """Partition into r connected parts with sizes differing by at most
    one, ordered large parts first, or None."""
    g.validate()
    if r < 1:
        raise ValueError("need at least one part")
    n = g.n
    if r > n:
        return [[v] for v in range(n)] + [[] for _ in range(r - n)]
    k, vis = vertex_integrity(g)
    s_list = sorted(vis.separator)
    hi, lo, b = ceil(n / r), n // r, n % r

    if r <= k:
        if lo <= k:
            return _ecp_small(g, r)
        return _ecp_case1(g, r, s_list, hi, lo, b)
    return _ecp_case2(g, r, s_list, hi, lo, b)


def _ecp_case1(g, r, s_list, hi, lo, b):
    # every part is larger than any component, so each part meets the
    # separator and r cannot exceed its size
    if r > len(s_list):
        return None
    groups = classify_detailed(g, s_list)
    targets = [hi] * b + [lo] * (r - b)

    mu_lists = []
    for (t, comps) in groups:
        rep = comps[0]
        seen = {}
        for labels in product(range(1, r + 1), repeat=len(rep)):
            mu = dict(zip(rep, labels))
            code = labelled_code(g, s_list, rep, mu)
            if code not in seen:
                seen[code] = mu
        mu_lists.append([mu for (_, mu) in sorted(seen.items())])

    for picks in product(range(1, r + 1), repeat=len(s_list)):
        assign = dict(zip(s_list, picks))
        s_classes = [{v for v in s_list if assign[v] == i + 1} for i in range(r)]
        if any(not c for c in s_classes):
            continue
        per_type_choices = []
        for (t, comps), mus in zip(groups, mu_lists):
            opts = []
            for take in range(1, min(len(comps), len(mus)) + 1):
                opts.extend(combinations(range(len(mus)), take))
            per_type_choices.append(opts)
        for combo in product(*per_type_choices):
            got = _ecp_try_representation(
                g, s_list, groups, mu_lists, combo, s_classes, targets
            )
            if got is not None:
                return got
    return None


def _ecp_try_representation(g, s_list, groups, mu_lists, combo, s_classes, targets):
    r = len(s_classes)
    # connectivity check on distinct concrete components per chosen pair
    chunks = [set(c) for c in s_classes]
    for (t, comps), mus, chosen in zip(groups, mu_lists, combo):
        for slot, mi in enumerate(chosen):
            comp = comps[slot]
            mu = mus[mi]
            if comp == comps[0]:
                mapped = mu
            else:
                phi = _component_iso(g, s_list, comps[0], comp)
                mapped = {phi[v]: c for v, c in mu.items()}
            for v, c in mapped.items():
                chunks[c - 1].add(v)
    if any(not is_connected_subset(g, chunk) for chunk in chunks):
        return None

    cols = []
    for gi, ((t, comps), chosen) in enumerate(zip(groups, combo)):
        for mi in chosen:
            cols.append((gi, mi))
    bounds = [(1, len(groups[gi][1])) for (gi, _) in cols]
    constraints = []
    for gi, (t, comps) in enumerate(groups):
        row = [1 if c[0] == gi else 0 for c in cols]
        constraints.append((tuple(row), "==", len(comps)))
    for i in range(r):
        row = [
            sum(1 for c in mu_lists[gi][mi].values() if c == i + 1)
            for (gi, mi) in cols
        ]
        constraints.append((tuple(row), "==", targets[i] - len(s_classes[i])))
    point = feasible(IlpInstance(tuple(bounds), tuple(constraints)))
    if point is None:
        return None

    parts = [set(c) for c in s_classes]
    next_free = [0] * len(groups)
    for (gi, mi), cnt in zip(cols, point):
        comps = groups[gi][1]
        mu = mu_lists[gi][mi]
        for _ in range(cnt):
            comp = comps[next_free[gi]]
            next_free[gi] += 1
            if comp is comps[0]:
                mapped = mu
            else:
                phi = _component_iso(g, s_list, comps[0], comp)
                mapped = {phi[v]: c for v, c in mu.items()}
            for v, c in mapped.items():
                parts[c - 1].add(v)
    return [sorted(p) for p in parts]


def _ecp_case2(g, r, s_list, hi, lo, b):
    for touching in range(min(len(s_list), r) + 1):
        for big in range(0, min(touching, b) + 1):
            if b - big > r - touching:
                continue
            sizes = [hi] * big + [lo] * (touching - big)
            if s_list and touching == 0:
                continue
            for s_parts in _ecp_separator_parts(g, s_list, sizes):
                w = set().union(*s_parts) if s_parts else set()
                comp_opts = []
                feasible_all = True
                for comp in components(g, w):
                    opts = []
                    for p in range(len(comp) // hi + 1):
                        rem = len(comp) - p * hi
                        if rem < 0:
                            continue
                        if lo == 0:
                            if rem:
                                continue
                            q = 0
                        else:
                            if rem % lo:
                                continue
                            q = rem // lo
                        if _sized_partition(g, comp, [hi] * p + [lo] * q) is not None:
                            opts.append((p, q))
                    if not opts:
                        feasible_all = False
                        break
                    comp_opts.append((comp, opts))
                if not feasible_all:
                    continue
                target = (b - big, (r - touching) - (b - big))
                pickings = _pair_dp(comp_opts, target)
                if pickings is None:
                    continue
                big_parts = [sorted(p) for p in s_parts[:big]]
                small_parts = [sorted(p) for p in s_parts[big:]]
                for (comp, _), (p, q) in zip(comp_opts, pickings):
                    got = _sized_partition(g, comp, [hi] * p + [lo] * q)
                    if hi == lo:
                        small_parts.extend(sorted(part) for (_, part) in got)
                    else:
                        big_parts.extend(sorted(part) for (s, part) in got if s == hi)
                        small_parts.extend(sorted(part) for (s, part) in got if s == lo)
                return big_parts + small_parts
    return None


def _pair_dp(comp_opts, target):
    """Choose one (p, q) per component summing to ``target``, or None."""
    states = {(0, 0): []}
    for (comp, opts) in comp_opts:
        nxt = {}
        for (sp, sq), hist in states.items():
            for (p, q) in opts:
                key = (sp + p, sq + q)
                if key[0] > target[0] or key[1] > target[1]:
                    continue
                if key not in nxt:
                    nxt[key] = hist + [(p, q)]
        states = nxt
        if not states:
            return None
    return states.get(target)
