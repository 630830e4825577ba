"""Kernel backend selection.

The hot loops (transitive closure/reduction and the endpoint sweep) run
compiled through numba by default.  Setting the environment variable
``UBGRAPH_DISABLE_NUMBA`` to anything other than "" or "0" forces the
interpreted numpy backend; the same fallback engages automatically when
numba is not installed.  Both backends implement identical contracts
and are cross-checked in the test suite.
"""

from __future__ import annotations

import os
from typing import Callable, NamedTuple

DISABLE_ENV = "UBGRAPH_DISABLE_NUMBA"


class Kernels(NamedTuple):
    name: str
    closure_reduce: Callable
    sweep_scan: Callable


def load_numpy_kernels() -> Kernels:
    from . import _kernels_np

    return Kernels("numpy", _kernels_np.closure_reduce, _kernels_np.sweep_scan)


def load_numba_kernels() -> Kernels | None:
    """Compiled kernels, or None when numba cannot be imported."""
    try:
        import numba
    except ImportError:
        return None
    from . import _kernels_py

    jit = numba.njit(cache=True)
    return Kernels(
        "numba",
        jit(_kernels_py.closure_reduce),
        jit(_kernels_py.sweep_scan),
    )


def _select() -> Kernels:
    if os.environ.get(DISABLE_ENV, "") not in ("", "0"):
        return load_numpy_kernels()
    return load_numba_kernels() or load_numpy_kernels()


ACTIVE: Kernels = _select()


def backend_name() -> str:
    """Name of the kernel backend in use ("numba" or "numpy")."""
    return ACTIVE.name
