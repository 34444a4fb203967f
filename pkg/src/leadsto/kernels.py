"""Backend selection for the hot kernels.

The compiled extension ``leadsto._ckernels`` is used when it imports;
otherwise the pure-Python module is used. Set ``LEADSTO_PURE_PYTHON=1`` to
force the fallback.
"""

import os

if os.environ.get("LEADSTO_PURE_PYTHON"):
    from leadsto import _pykernels as _impl
    BACKEND = "python"
else:
    try:
        from leadsto import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:  # extension not built
        from leadsto import _pykernels as _impl
        BACKEND = "python"

loop_counts = _impl.loop_counts
min_code = _impl.min_code


def longest_cycle(n, adjacency, stop_at=0):
    if BACKEND == "cython" and n <= 64:
        return _impl.longest_cycle(n, adjacency, stop_at)
    from leadsto import _pykernels
    return _pykernels.longest_cycle(n, adjacency, stop_at)


__all__ = ["BACKEND", "loop_counts", "min_code", "longest_cycle"]
