"""Compare the active scan kernels against their pure-Python handles.

Every kernel ships in two forms: the plain function (kept under a ``_py``
name) and, when numba is importable and VIFORGE_NUMBA is not "0", a jitted
binding that the solvers actually call.  This script runs both forms on
fixed workloads, checks they return identical answers, and reports the
wall-clock ratio.  With numba disabled the two columns time the same
function, which is a useful baseline for the fallback path.
"""

import argparse
import random
import time

import numpy as np

from viforge import _kernels


def _rand_graph_arrays(rng, n, p):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    adj = np.zeros((n, n), dtype=np.uint8)
    for (u, v) in edges:
        adj[u, v] = 1
        adj[v, u] = 1
    eu = np.array([e[0] for e in edges], dtype=np.int64)
    ev = np.array([e[1] for e in edges], dtype=np.int64)
    return adj, eu, ev


def _workloads():
    rng = random.Random("bench-kernels")
    adj8, eu8, ev8 = _rand_graph_arrays(rng, 8, 0.45)
    adj5, eu5, ev5 = _rand_graph_arrays(rng, 5, 0.6)
    adj9a, _, _ = _rand_graph_arrays(rng, 9, 0.4)
    adj9b, _, _ = _rand_graph_arrays(rng, 9, 0.4)
    p8 = _kernels.perm_table(8)
    p7 = _kernels.perm_table(7)

    w = np.array([rng.randint(1, 4) for _ in range(eu8.shape[0])],
                 dtype=np.int64)
    r = int(w.sum()) // 8 + 1

    pvars = 5
    A = np.array([[rng.randint(-3, 3) for _ in range(pvars)]
                  for _ in range(4)], dtype=np.int64)
    b = np.array([rng.randint(0, 10) for _ in range(4)], dtype=np.int64)
    lo = np.zeros(pvars, dtype=np.int64)
    hi = np.full(pvars, 8, dtype=np.int64)
    c = np.array([rng.randint(-3, 3) for _ in range(pvars)], dtype=np.int64)
    desc = np.zeros(pvars, dtype=np.uint8)

    attrs = np.array([rng.randint(0, 2) for _ in range(8)], dtype=np.int64)

    return [
        ("imbalance_scan", (adj8, p8)),
        ("bandwidth_scan", (eu8, ev8, 8, p8)),
        ("mcs_scan", (eu5, ev5, adj8, 5, p8)),
        ("mcis_scan", (adj9a, adj9b)),
        ("orient_scan", (eu8, ev8, w, 8, r)),
        ("ilp_scan", (A, b, lo, hi, c, True, desc)),
        ("min_anchored_code", (adj8, attrs, 1, p7)),
    ]


def _same(a, b):
    if isinstance(a, tuple):
        return len(a) == len(b) and all(_same(x, y) for x, y in zip(a, b))
    if isinstance(a, np.ndarray) or isinstance(b, np.ndarray):
        return np.array_equal(np.asarray(a), np.asarray(b))
    return a == b


def _time(fn, args, repeats):
    out = None
    best = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(*args)
        dt = time.perf_counter() - t0
        if best is None or dt < best:
            best = dt
    return out, best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeats", type=int, default=3,
                    help="timed runs per kernel, best is kept (default 3)")
    args = ap.parse_args()

    print(f"numba active: {_kernels.USING_NUMBA}")
    if _kernels.USING_NUMBA:
        _kernels.warmup()

    rows = []
    for name, payload in _workloads():
        active = getattr(_kernels, name)
        pure = getattr(_kernels, name + "_py")
        got, t_active = _time(active, payload, args.repeats)
        want, t_pure = _time(pure, payload, 1)
        if not _same(got, want):
            raise SystemExit(f"{name}: active and pure results differ")
        rows.append((name, t_pure, t_active, t_pure / t_active))

    print(f"{'kernel':<20} {'pure (s)':>10} {'active (s)':>11} {'ratio':>8}")
    for name, t_pure, t_active, ratio in rows:
        print(f"{name:<20} {t_pure:>10.4f} {t_active:>11.4f} {ratio:>7.1f}x")


if __name__ == "__main__":
    main()
