"""Benchmark: numba vs pure-numpy mod-p row-reduction kernel.

Run:  python3 benchmarks/bench_fp_kernels.py [--dim 2000] [--rows 800] [--p 3]

Times the elimination sweep both ways in one process (the environment flag
KLRCOCENTER_NO_NUMBA selects the kernel in library use; here the two
implementations are invoked directly so a single run compares them).
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from klrcocenter.fp_kernels import _build_numba_kernel, reduce_row_numpy


def make_echelon_rows(rng, nrows, dim, p):
    rows = np.zeros((nrows, dim), dtype=np.int64)
    pivcols = np.sort(rng.choice(dim, size=nrows, replace=False)).astype(np.int64)
    for r in range(nrows):
        c = pivcols[r]
        rows[r, c] = 1
        tail = rng.integers(0, p, size=dim - c - 1)
        rows[r, c + 1:] = tail
    return rows, pivcols


def run(kernel, rows, pivcols, vecs, p):
    t0 = time.perf_counter()
    for v in vecs:
        kernel(rows, pivcols, len(rows), v, p)
    return time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--dim", type=int, default=2000)
    ap.add_argument("--rows", type=int, default=800)
    ap.add_argument("--p", type=int, default=3)
    ap.add_argument("--vecs", type=int, default=200)
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    rows, pivcols = make_echelon_rows(rng, args.rows, args.dim, args.p)
    vecs = rng.integers(0, args.p, size=(args.vecs, args.dim)).astype(np.int64)

    numba_kernel = None
    try:
        numba_kernel = _build_numba_kernel()
        numba_kernel(rows, pivcols, len(rows), vecs[0].copy(), args.p)  # warm up
    except Exception as exc:
        print(f"numba unavailable ({exc}); benchmarking numpy only")

    t_np = run(reduce_row_numpy, rows, pivcols, [v.copy() for v in vecs], args.p)
    print(f"numpy : {t_np:.3f}s for {args.vecs} reductions "
          f"({args.rows} rows x {args.dim} cols, p={args.p})")
    if numba_kernel is not None:
        out_np = vecs[0].copy(); reduce_row_numpy(rows, pivcols, len(rows), out_np, args.p)
        out_nb = vecs[0].copy(); numba_kernel(rows, pivcols, len(rows), out_nb, args.p)
        assert np.array_equal(out_np, out_nb), "kernels disagree"
        t_nb = run(numba_kernel, rows, pivcols, [v.copy() for v in vecs], args.p)
        print(f"numba : {t_nb:.3f}s  (speedup x{t_np / t_nb:.1f})")


if __name__ == "__main__":
    main()
