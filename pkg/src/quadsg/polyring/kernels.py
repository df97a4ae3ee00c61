"""Kernel selection: the compiled extension when available, else pure Python.

Set ``QUADSG_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

if os.environ.get("QUADSG_PURE_PYTHON", "") not in ("", "0"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND: str = _impl.BACKEND
poly_mul = _impl.poly_mul
content = _impl.content
primitive = _impl.primitive
combine = _impl.combine
spoly = _impl.spoly
normal_form = _impl.normal_form


def load_backend(name: str):
    """Return the kernel module called ``name`` ("python" or "cython")."""
    if name == "python":
        from . import _kernels_py

        return _kernels_py
    if name == "cython":
        from . import _kernels  # type: ignore[attr-defined]

        return _kernels
    raise ValueError(f"unknown kernel backend {name!r}")
