"""Select the reduction kernel at import time.

The compiled extension is used when it was built; setting the environment
variable ``PARTRUTH_PURE_PYTHON=1`` forces the pure-Python fallback.
"""

import contextlib
import os

from . import _kernel_py

pure = _kernel_py

if os.environ.get("PARTRUTH_PURE_PYTHON", "") not in ("", "0"):
    active = _kernel_py
else:
    try:
        from . import _kernel as active  # type: ignore[attr-defined]
    except ImportError:
        active = _kernel_py

try:
    from . import _kernel as compiled  # type: ignore[attr-defined]
except ImportError:
    compiled = None

BACKEND = active.BACKEND
reduce_poly = active.reduce_poly
spoly = active.spoly
make_primitive = active.make_primitive


@contextlib.contextmanager
def using(backend):
    """Temporarily route reductions through ``backend`` (a kernel module)."""
    global BACKEND, reduce_poly, spoly, make_primitive
    saved = BACKEND, reduce_poly, spoly, make_primitive
    BACKEND = backend.BACKEND
    reduce_poly, spoly, make_primitive = backend.reduce_poly, backend.spoly, backend.make_primitive
    try:
        yield backend
    finally:
        BACKEND, reduce_poly, spoly, make_primitive = saved
