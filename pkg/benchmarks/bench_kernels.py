"""Timings for the census screening kernel and the census driver.

    python3 benchmarks/bench_kernels.py [--max-j 24] [--jobs 1 4]

Compares the numba kernel with the numpy fallback on the same shards, then
times full censuses at each requested job count. The numba timing excludes
the first (compiling) call.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from threej_zeros.census import CensusConfig, format_jsonl, run_census, shards
from threej_zeros.kernels import inverse_factorial_tables, numba_available, screen_rows_numba, screen_rows_numpy


def best_of(fn, repeat: int = 3) -> tuple[float, object]:
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-j", type=int, default=24)
    ap.add_argument("--jobs", type=int, nargs="+", default=[1, 4])
    args = ap.parse_args()

    rows = np.array(shards(args.max_j), dtype=np.int64)
    inv = inverse_factorial_tables(args.max_j + 1)

    t_np, (n, cand_np) = best_of(lambda: screen_rows_numpy(rows, inv))
    print(f"shards: {len(rows)}, squares: {n}, candidates: {len(cand_np)}")
    print(f"numpy kernel : {t_np:8.3f} s  ({n / t_np / 1e6:.2f} M squares/s)")
    if numba_available():
        screen_rows_numba(rows[:1], inv)  # compile or load from cache
        t_nb, (_, cand_nb) = best_of(lambda: screen_rows_numba(rows, inv))
        assert np.array_equal(cand_np, cand_nb), "backends disagree"
        print(f"numba kernel : {t_nb:8.3f} s  ({n / t_nb / 1e6:.2f} M squares/s), speedup x{t_np / t_nb:.1f}")
    else:
        print("numba kernel : disabled")

    ref = None
    for jobs in args.jobs:
        t0 = time.perf_counter()
        rep = run_census(CensusConfig(args.max_j, jobs=jobs))
        dt = time.perf_counter() - t0
        text = format_jsonl(rep)
        same = "" if ref is None else ("  (output identical)" if text == ref else "  (OUTPUT DIFFERS)")
        ref = ref or text
        print(f"census J <= {args.max_j}, jobs={jobs}: {dt:7.3f} s, {len(rep.records)} canonical zeros{same}")


if __name__ == "__main__":
    main()
