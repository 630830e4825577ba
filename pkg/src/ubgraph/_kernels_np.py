"""Interpreted backend: vectorized numpy kernels.

Used when numba is unavailable or disabled.  The closure and reduction
work row-at-a-time with boolean array operations, which keeps them
usable at benchmark sizes without a compiler.  These deliberately avoid
matrix products so no BLAS thread pool is involved; timed sections stay
single-threaded.
"""

from __future__ import annotations

import numpy as np

from ._kernels_py import sweep_scan as sweep_scan  # loop is short; reused as-is


def closure_reduce(adj: np.ndarray) -> tuple[bool, np.ndarray]:
    """Vectorized transitive closure + reduction; see _kernels_py."""
    n = adj.shape[0]
    reach = adj.copy()
    for k in range(n):
        src = reach[:, k]
        if src.any():
            reach[src] |= reach[k]
    if bool(reach.diagonal().any()):
        return True, np.zeros((n, n), dtype=np.bool_)
    # two-hop pairs: shadow[i, j] iff some k has reach[i, k] and reach[k, j]
    shadow = np.zeros_like(reach)
    for k in range(n):
        src = reach[:, k]
        if src.any():
            shadow[src] |= reach[k]
    return False, reach & ~shadow
