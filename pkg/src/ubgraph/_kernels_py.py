"""Loop-form kernels shared by the JIT and interpreted backends.

Every function here is written against numpy arrays with plain Python
control flow so that numba can compile it unchanged.  The interpreted
backend reuses ``sweep_scan`` directly (its loop is short) and swaps
``closure_reduce`` for a vectorized variant; see _kernels_np.py.
"""

from __future__ import annotations

import numpy as np

# Kind codes for sweep entries.  The sort ranks minimum endpoints first
# and maximum endpoints last within one instant; see graph.sweep_entries.
KIND_MINIMUM = 0
KIND_CERTAIN = 1
KIND_MAXIMUM = 2


def closure_reduce(adj):
    """Transitive closure plus transitive reduction of a relation matrix.

    Returns (cyclic, reduced).  When ``cyclic`` is True the input admits
    a cycle, the reduction is undefined and ``reduced`` is all False.
    """
    n = adj.shape[0]
    reach = adj.copy()
    for k in range(n):
        for i in range(n):
            if reach[i, k]:
                for j in range(n):
                    if reach[k, j]:
                        reach[i, j] = True
    reduced = np.zeros((n, n), dtype=np.bool_)
    for i in range(n):
        if reach[i, i]:
            return True, reduced
    for i in range(n):
        for j in range(n):
            if reach[i, j]:
                keep = True
                for k in range(n):
                    if reach[i, k] and reach[k, j]:
                        keep = False
                        break
                if keep:
                    reduced[i, j] = True
    return False, reduced


def sweep_scan(times, kinds, events, n):
    """Edge matrix of the behavior graph from sorted timestamp entries.

    ``times``/``kinds``/``events`` describe the entry list sorted by
    (time, kind, event id); ``events`` holds event indices < n.  Scans
    forward from every certain or maximum entry, linking it to events
    that start strictly later, and stops once a successor at time T is
    committed; entries tied at T are still examined so that equal
    timestamps cannot hide a direct successor.
    """
    m = times.shape[0]
    edges = np.zeros((n, n), dtype=np.bool_)
    for i in range(m - 1):
        if kinds[i] == KIND_MINIMUM:
            continue
        t_anchor = times[i]
        e_anchor = events[i]
        stop_t = np.int64(0)
        stopping = False
        for j in range(i + 1, m):
            t = times[j]
            if stopping and t > stop_t:
                break
            if t == t_anchor:
                continue
            kind = kinds[j]
            e = events[j]
            if kind == KIND_MINIMUM:
                edges[e_anchor, e] = True
            elif kind == KIND_CERTAIN:
                edges[e_anchor, e] = True
                stopping = True
                stop_t = t
            else:
                if edges[e_anchor, e]:
                    stopping = True
                    stop_t = t
    return edges
