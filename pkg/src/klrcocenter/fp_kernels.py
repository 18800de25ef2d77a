"""Dense mod-p elimination kernels.

The inner loop of echelon maintenance over F_p is dense integer arithmetic,
so it gets a numba-compiled kernel with a pure-numpy fallback.  Set
``KLRCOCENTER_NO_NUMBA=1`` to force the numpy path (the benchmark script
compares the two).  Rational-field elimination stays in exact big-integer
arithmetic and is not handled here.
"""
from __future__ import annotations

import os

import numpy as np


def reduce_row_numpy(rows: np.ndarray, pivcols: np.ndarray, nrows: int,
                     vec: np.ndarray, p: int) -> None:
    """Reduce vec in place against nrows echelon rows (pivot entries = 1).

    Rows must be ordered by increasing pivot column; a single increasing
    sweep is then complete because each row is supported on columns >= its
    pivot.
    """
    for r in range(nrows):
        f = vec[pivcols[r]] % p
        if f:
            vec -= f * rows[r]
            vec %= p


def _build_numba_kernel():
    from numba import njit

    @njit(cache=True)
    def reduce_row_numba(rows, pivcols, nrows, vec, p):  # pragma: no cover
        ncols = vec.shape[0]
        for r in range(nrows):
            f = vec[pivcols[r]] % p
            if f:
                row = rows[r]
                for c in range(pivcols[r], ncols):
                    if row[c]:
                        vec[c] = (vec[c] - f * row[c]) % p

    return reduce_row_numba


_kernel = None


def get_reduce_kernel():
    """Return the active kernel, honoring KLRCOCENTER_NO_NUMBA."""
    global _kernel
    if _kernel is not None:
        return _kernel
    if os.environ.get("KLRCOCENTER_NO_NUMBA", "") not in ("", "0"):
        _kernel = reduce_row_numpy
        return _kernel
    try:
        _kernel = _build_numba_kernel()
    except Exception:
        _kernel = reduce_row_numpy
    return _kernel
