"""Kernel dispatch: numba-compiled fast path with a pure fallback.

Set the environment variable ``DOUBLEPOSETS_PURE=1`` before import to force
the pure path; otherwise numba is used when importable.  Both paths compute
identical results (the test suite asserts this), they just differ in speed.

Public entry points take plain tuples of int bitmasks so callers never deal
with numpy dtypes; array packing happens here.
"""

from __future__ import annotations

import os

import numpy as np

from . import _pure

_PURE_ENV = "DOUBLEPOSETS_PURE"


def _pure_requested() -> bool:
    return os.environ.get(_PURE_ENV, "").strip().lower() in {"1", "true", "yes", "on"}


_compiled = None
if not _pure_requested():
    try:
        import numba

        from . import _kernels

        _compiled = {
            name: numba.njit(cache=True)(getattr(_kernels, name))
            for name in (
                "picture_count",
                "picture_count_matrix",
                "canon_minimize",
                "ideal_masks",
                "surjection_mask",
            )
        }
    except ImportError:
        _compiled = None

USING_NUMBA = _compiled is not None

# Largest n whose n*n adjacency bits sit strictly inside the kernel's
# signed int64 words (n of 8 would need the sign bit).
_CANON_KERNEL_MAX_N = 7


def backend_name() -> str:
    return "numba" if USING_NUMBA else "pure"


def _mask_array(masks) -> np.ndarray:
    return np.asarray(masks, dtype=np.int64)


def count_pictures(e_up1, e_up2, f_up1, f_up2) -> int:
    """Number of pictures between two double posets given as up-mask tuples."""
    if USING_NUMBA:
        return int(
            _compiled["picture_count"](
                _mask_array(e_up1), _mask_array(e_up2), _mask_array(f_up1), _mask_array(f_up2)
            )
        )
    return _pure.picture_count(e_up1, e_up2, f_up1, f_up2)


def pack_mask_rows(mask_tuples) -> np.ndarray:
    """Stack equal-length mask tuples into an (m, n) int64 array."""
    if not mask_tuples:
        return np.zeros((0, 0), np.int64)
    return np.array(mask_tuples, dtype=np.int64)


def count_pictures_matrix(a_up1, a_up2, b_up1, b_up2) -> np.ndarray:
    """Full picture-count matrix between two packed families (same n)."""
    impl = _compiled["picture_count_matrix"] if USING_NUMBA else _pure.picture_count_matrix
    return impl(a_up1, a_up2, b_up1, b_up2)


def canon_minimize(up1, up2, n: int):
    """Minimal encoding words and witness relabelling; see kernel docstrings."""
    if USING_NUMBA and n <= _CANON_KERNEL_MAX_N:
        w1, w2, q = _compiled["canon_minimize"](_mask_array(up1), _mask_array(up2), n)
        return int(w1), int(w2), tuple(int(x) for x in q)
    return _pure.canon_minimize(up1, up2, n)


def ideal_masks(down, n: int) -> list[int]:
    """Masks of all downward-closed subsets, ascending."""
    if USING_NUMBA:
        return [int(s) for s in _compiled["ideal_masks"](_mask_array(down), n)]
    return _pure.ideal_masks(down, n)


def surjection_mask(table: np.ndarray, weak, strict) -> np.ndarray:
    """uint8 row filter for order conditions over a letter table."""
    weak_arr = np.asarray(weak, dtype=np.int64).reshape(-1, 2)
    strict_arr = np.asarray(strict, dtype=np.int64).reshape(-1, 2)
    if USING_NUMBA:
        return _compiled["surjection_mask"](table, weak_arr, strict_arr)
    return _pure.surjection_mask(table, weak_arr, strict_arr)
