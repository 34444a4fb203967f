"""Decide whether a link diagram reaches T(2,m) or a twist knot by crossing
exchanges and smoothings."""

__version__ = "0.1.0"

from leadsto.kernels import BACKEND  # noqa: E402

__all__ = ["BACKEND", "__version__"]
