"""Backend selection for the polynomial kernel.

The compiled twin is preferred when it imported cleanly; setting the
environment variable ``INCEKIT_PURE=1`` forces the pure-Python kernel
(useful for debugging and for the backend benchmark).
"""

import os

if os.environ.get("INCEKIT_PURE"):
    from . import ops_py as impl
else:
    try:
        from . import _ops_cy as impl  # type: ignore[attr-defined]
    except ImportError:
        from . import ops_py as impl

BACKEND = impl.BACKEND_NAME
mono_mul = impl.mono_mul
poly_add = impl.poly_add
poly_sub = impl.poly_sub
poly_neg = impl.poly_neg
poly_scale = impl.poly_scale
poly_mul_term = impl.poly_mul_term
poly_mul = impl.poly_mul
