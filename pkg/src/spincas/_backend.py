"""Kernel backend selection.

Prefers the compiled extension; falls back to the pure-Python kernels.
``SPINCAS_KERNEL=python`` forces the fallback (used by the benchmark and by
the backend-parity tests).
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("SPINCAS_KERNEL", "").lower() == "python":
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

mat_mul = _impl.mat_mul
mat_kron = _impl.mat_kron
mat_lincomb = _impl.mat_lincomb
mat_rank = _impl.mat_rank
