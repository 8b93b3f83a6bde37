"""Retarded-time solver kernels.

Two interchangeable backends implement the same bracketed bisection +
guarded-Newton iteration over arrays of reception times: a compiled Cython
extension (``_native``) and a vectorized NumPy fallback (``_pure``).  The
native backend is preferred when its extension module importable; setting
the environment variable ``DOPPLERLAB_PURE_KERNELS=1`` forces the fallback.
"""

import importlib
import os

from . import _pure

#: Integer ids for the built-in profiles, shared by both backends.
PROFILE_IDS = {"constant": 0, "decelerating": 1, "oscillatory": 2}

_native = None
if os.environ.get("DOPPLERLAB_PURE_KERNELS", "") != "1":
    try:
        _native = importlib.import_module("._native", __name__)
    except ImportError:
        _native = None

if _native is not None:
    BACKEND = "native"
    solve_retarded = _native.solve_retarded
else:
    BACKEND = "pure"
    solve_retarded = _pure.solve_retarded

#: Scalar solver for custom (callable-based) profiles; always pure Python.
solve_retarded_scalar = _pure.solve_retarded_scalar


def backend_name() -> str:
    """Name of the array backend selected at import time."""
    return BACKEND


def available_backends() -> dict:
    """Map backend name -> solver callable, for benchmarks and parity tests."""
    out = {"pure": _pure.solve_retarded}
    if _native is not None:
        out["native"] = _native.solve_retarded
    return out
