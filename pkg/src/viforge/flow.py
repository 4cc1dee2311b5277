"""Integral max-flow on small networks.

Edmonds-Karp with arcs scanned in insertion order, so equal-capacity
networks always produce the same flow.  Capacities must be non-negative
integers; parallel arcs are allowed and keep separate flow values.
"""

from collections import deque


def max_flow(n, arcs, source, sink):
    """Maximum s-t flow value and per-arc flows.

    ``arcs`` is a sequence of (tail, head, capacity) triples.  Returns
    (value, flows) with flows[i] the amount routed through arcs[i].
    """
    if not (0 <= source < n and 0 <= sink < n):
        raise ValueError("source or sink out of range")
    if source == sink:
        raise ValueError("source equals sink")
    cap = []
    adj = [[] for _ in range(n)]
    for (u, v, c) in arcs:
        c = int(c)
        if c < 0:
            raise ValueError("negative capacity")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError("arc endpoint out of range")
        # forward entry, then its residual twin
        adj[u].append(len(cap))
        cap.append(c)
        adj[v].append(len(cap))
        cap.append(0)
    head = []
    for (u, v, _) in arcs:
        head.extend((v, u))

    value = 0
    while True:
        prev_arc = [-1] * n
        prev_arc[source] = -2
        queue = deque([source])
        while queue and prev_arc[sink] == -1:
            u = queue.popleft()
            for a in adj[u]:
                w = head[a]
                if cap[a] > 0 and prev_arc[w] == -1:
                    prev_arc[w] = a
                    queue.append(w)
        if prev_arc[sink] == -1:
            break
        # bottleneck along the path
        push = None
        v = sink
        while v != source:
            a = prev_arc[v]
            push = cap[a] if push is None else min(push, cap[a])
            v = head[a ^ 1]
        v = sink
        while v != source:
            a = prev_arc[v]
            cap[a] -= push
            cap[a ^ 1] += push
            v = head[a ^ 1]
        value += push

    flows = []
    for i, (_, _, c) in enumerate(arcs):
        flows.append(c - cap[2 * i])
    return value, flows
