"""Backend selection for the hot kernels.

Kernels are written once as plain Python over numpy arrays and compiled with
numba when it is importable.  Setting ``COPTHROTTLE_DISABLE_NUMBA=1`` (or
calling :func:`set_backend`) routes every dispatcher to the pure numpy/Python
path instead, which is what the benchmark compares against.
"""
from __future__ import annotations

import os

try:
    import numba

    NUMBA_AVAILABLE = True
    if "NUMBA_THREADING_LAYER" not in os.environ:
        # the system TBB is too old for numba; skip probing it
        numba.config.THREADING_LAYER = "workqueue"
except ImportError:  # pragma: no cover
    numba = None
    NUMBA_AVAILABLE = False

_DISABLED = os.environ.get("COPTHROTTLE_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes"}

_state = {"backend": "numba" if NUMBA_AVAILABLE and not _DISABLED else "numpy"}


def njit(*args, **kwargs):
    """``numba.njit`` when available, otherwise an identity decorator.

    The undecorated function stays reachable as ``.py_func`` either way.
    """
    kwargs.setdefault("cache", True)

    def wrap(f):
        if not NUMBA_AVAILABLE:
            f.py_func = f
            return f
        return numba.njit(**kwargs)(f)

    if len(args) == 1 and callable(args[0]):
        return wrap(args[0])
    return wrap


prange = numba.prange if NUMBA_AVAILABLE else range


def backend() -> str:
    return _state["backend"]


def set_backend(name: str) -> None:
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and not NUMBA_AVAILABLE:
        raise RuntimeError("numba is not installed")
    _state["backend"] = name


def use_numba() -> bool:
    return _state["backend"] == "numba"


def set_threads(n: int) -> None:
    if NUMBA_AVAILABLE and n >= 1:
        numba.set_num_threads(min(n, numba.config.NUMBA_NUM_THREADS))
