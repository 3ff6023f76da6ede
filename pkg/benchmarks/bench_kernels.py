"""Benchmark the jitted kernels against the pure-numpy fallbacks.

Times the two hot paths on the same inputs:

  * row reduction of a batch of random matrices mod p
  * the gram filter used by the self-dual census (is G G^T == 0 for
    every generator in a batch)

The jitted variants need one warmup call to compile; warmup time is
reported separately so the steady-state numbers are comparable.

Usage: python benchmarks/bench_kernels.py [--batches 40] [--p 5]
"""

import argparse
import time

import numpy as np

from fpvcodes import _kernels
from fpvcodes.primefield import inverse_table


def time_rref(fn, mats, p, invt):
    start = time.perf_counter()
    total_rank = 0
    for mat in mats:
        work = mat.copy()
        pivots = np.zeros(min(work.shape), dtype=np.int64)
        total_rank += fn(work, p, invt, pivots)
    return time.perf_counter() - start, total_rank


def time_gram(fn, batches, p):
    start = time.perf_counter()
    survivors = 0
    for gens in batches:
        survivors += int(fn(gens, p).sum())
    return time.perf_counter() - start, survivors


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--batches", type=int, default=40, help="matrix batches per kernel")
    ap.add_argument("--rows", type=int, default=48, help="rows per matrix in the rref batch")
    ap.add_argument("--cols", type=int, default=64, help="columns per matrix in the rref batch")
    ap.add_argument("--p", type=int, default=5, help="prime modulus")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    if not _kernels.HAVE_NUMBA:
        raise SystemExit(
            "numba is unavailable (or FPVCODES_NO_NUMBA is set); "
            "nothing to compare against"
        )

    rng = np.random.default_rng(args.seed)
    p = args.p
    invt = inverse_table(p)

    mats = [
        rng.integers(0, p, size=(args.rows, args.cols)).astype(np.int64)
        for _ in range(args.batches)
    ]
    gram_batches = [
        rng.integers(0, p, size=(4096, 3, 6)).astype(np.int64) for _ in range(args.batches)
    ]

    # compile before timing
    t0 = time.perf_counter()
    warm = mats[0].copy()
    _kernels.rref_mod_numba(warm, p, invt, np.zeros(min(warm.shape), dtype=np.int64))
    _kernels.batch_self_gram_zero_numba(gram_batches[0][:8], p)
    warmup = time.perf_counter() - t0
    print(f"numba warmup (compile): {warmup:.2f}s")
    print()

    t_nb, rank_nb = time_rref(_kernels.rref_mod_numba, mats, p, invt)
    t_np, rank_np = time_rref(_kernels.rref_mod_numpy, mats, p, invt)
    assert rank_nb == rank_np
    print(f"rref mod {p}  ({args.batches} x {args.rows}x{args.cols})")
    print(f"  numba : {t_nb:.4f}s")
    print(f"  numpy : {t_np:.4f}s")
    print(f"  ratio : {t_np / t_nb:.1f}x")
    print()

    t_nb, hits_nb = time_gram(_kernels.batch_self_gram_zero_numba, gram_batches, p)
    t_np, hits_np = time_gram(_kernels.batch_self_gram_zero_numpy, gram_batches, p)
    assert hits_nb == hits_np
    total = args.batches * 4096
    print(f"gram filter mod {p}  ({total} generators of shape 3x6)")
    print(f"  numba : {t_nb:.4f}s")
    print(f"  numpy : {t_np:.4f}s")
    print(f"  ratio : {t_np / t_nb:.1f}x")


if __name__ == "__main__":
    main()
