"""Kernel backend selection.

The compiled extension is preferred; the pure-NumPy twin is used when the
extension is missing or when TWOSTRAIN_PURE_PYTHON is set in the
environment. Both expose the same functions and status codes, so the rest
of the package never cares which one it got.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("TWOSTRAIN_PURE_PYTHON"):
    kernels = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:  # pragma: no cover - depends on the build
        kernels = _kernels_py
        BACKEND = "python"


def backend_name() -> str:
    """Name of the kernel backend in use: 'compiled' or 'python'."""
    return BACKEND
