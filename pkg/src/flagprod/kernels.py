"""Kernel dispatch: numba when available, pure numpy otherwise.

Set FLAGPROD_NO_NUMBA=1 to force the numpy path.  The implementation module
is loaded lazily on first kernel call so that commands which never touch an
orbit (solve, audit) do not pay the numba import.
"""

from __future__ import annotations

import os

_impl = None
_backend = None


def _load():
    global _impl, _backend
    if _impl is not None:
        return _impl
    disabled = os.environ.get("FLAGPROD_NO_NUMBA", "").strip() not in ("", "0")
    if not disabled:
        try:
            from . import _kernels_numba as mod
            _impl, _backend = mod, "numba"
            return _impl
        except ImportError:
            pass
    from . import _kernels_python as mod
    _impl, _backend = mod, "numpy"
    return _impl


def backend() -> str:
    _load()
    return _backend


def closure(start, maps, sort_from, cap):
    return _load().closure(start, maps, sort_from, cap)


def pair_count_matrix(blocks, v):
    return _load().pair_count_matrix(blocks, v)


def pair_count_subset(blocks, v, codes_sorted):
    return _load().pair_count_subset(blocks, v, codes_sorted)


def block_pair_class_counts(blocks, omega):
    return _load().block_pair_class_counts(blocks, omega)


def grid_profile_ok(blocks, omega, c, d):
    return _load().grid_profile_ok(blocks, omega, c, d)
