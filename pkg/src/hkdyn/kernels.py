"""Kernel backend selection.

The compiled Cython core is preferred when present; otherwise the NumPy
implementation is used.  Set HKDYN_PURE_PY=1 to force the fallback (used by
the benchmark and the backend-parity tests).
"""

import os

from . import _kernels_py

if os.environ.get("HKDYN_PURE_PY"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels_cy as _impl

        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

mod_inverse_table = _impl.mod_inverse_table
kloosterman_block = _impl.kloosterman_block
kloosterman_batch = _impl.kloosterman_batch
trace_block = _impl.trace_block
trace_batch = _impl.trace_batch
affine_batch = _impl.affine_batch
first_match = _impl.first_match


def get_backend(name):
    """Return a kernel module by name ('compiled' or 'python'); for
    benchmarking and cross-checking the two implementations."""
    if name == "python":
        return _kernels_py
    if name == "compiled":
        from . import _kernels_cy

        return _kernels_cy
    raise ValueError(f"unknown backend {name!r}")
