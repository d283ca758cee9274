"""Backend selection for the arithmetic kernels.

The compiled module is preferred when importable; set LZERO_PURE=1 to force
the pure-Python fallback (used by the benchmark and the equivalence tests).
Results are bit-identical either way.
"""
import os

if os.environ.get("LZERO_PURE"):
    from lzero import _kernels_py as _impl
else:
    try:
        from lzero import _kernels_cy as _impl  # type: ignore[attr-defined]
    except ImportError:
        from lzero import _kernels_py as _impl

BACKEND = _impl.BACKEND
poly_mul_reduce = _impl.poly_mul_reduce
tower_mul = _impl.tower_mul
