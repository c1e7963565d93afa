"""Kernel backend selection.

Set ``MJPOLY_JIT=0`` to force the pure-numpy kernels; otherwise the numba
kernels are used whenever numba imports.
"""
from __future__ import annotations

import importlib
import os
from types import ModuleType

JIT_ENV = "MJPOLY_JIT"

try:
    import numba  # noqa: F401

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False


def jit_requested() -> bool:
    return os.environ.get(JIT_ENV, "1").strip().lower() not in ("0", "false", "off", "no")


def default_backend() -> str:
    return "numba" if HAVE_NUMBA and jit_requested() else "numpy"


def get_kernels(backend: str | None = None) -> ModuleType:
    """Kernel module for ``backend`` ("numba", "numpy" or None for the default)."""
    backend = backend or default_backend()
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is not importable")
        return importlib.import_module("mjpoly.numint.kernels_numba")
    if backend == "numpy":
        return importlib.import_module("mjpoly.numint.kernels_numpy")
    raise ValueError(f"unknown backend {backend!r}")
