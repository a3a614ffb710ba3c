"""Time the numba kernels against the numpy fallback and check they agree.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--max-b 5]

The first numba call includes JIT compilation (or a cache load), so it is
timed separately as ``warmup``.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from descalg import _kernels
from descalg.combinatorics import Flavor
from descalg.descent_algebra import class_data, group_tables


def best_of(repeat, fn):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench(name, repeat, run):
    t0 = time.perf_counter()
    run(True)
    warmup = time.perf_counter() - t0
    t_numba, a = best_of(repeat, lambda: run(True))
    t_numpy, b = best_of(repeat, lambda: run(False))
    same = np.array_equal(a, b)
    print(f"{name:<34} numba {t_numba * 1e3:9.2f} ms   numpy {t_numpy * 1e3:9.2f} ms   "
          f"speedup {t_numpy / t_numba:6.1f}x   warmup {warmup:6.2f} s   equal={same}")
    return same


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--max-b", type=int, default=5, help="largest B_n for the composition table")
    args = parser.parse_args()
    if not _kernels.NUMBA_AVAILABLE:
        print("numba is not installed; nothing to compare")
        return 1

    ok = True
    for n, signed in [(6, False), (4, True)] + [(k, True) for k in range(5, args.max_b + 1)]:
        t = group_tables(n, signed)
        label = f"compose table {'B' if signed else 'S'}_{n} ({len(t.windows)}^2)"
        ok &= bench(label, args.repeat, lambda use: _kernels.compose_table(t.windows, t.keys, use_numba=use))

    for flavor, n in [(Flavor.A, 6), (Flavor.B, 4), (Flavor.S, 4)]:
        t = group_tables(n, flavor is not Flavor.A)
        d = class_data(flavor, n)
        K = len(d.indices)
        targets = np.array([m[0] for m in d.members], dtype=np.int64)
        ok &= bench(
            f"factorization counts {flavor.value} n={n}",
            args.repeat,
            lambda use: _kernels.count_factorizations(t.mult, t.inv, d.class_of, targets, K, use_numba=use),
        )
        everything = np.arange(len(t.windows))
        ok &= bench(
            f"all-element counts {flavor.value} n={n}",
            args.repeat,
            lambda use: _kernels.count_factorizations(t.mult, t.inv, d.class_of, everything, K, use_numba=use),
        )
        ok &= bench(
            f"class products {flavor.value} n={n}",
            args.repeat,
            lambda use: np.stack(
                [_kernels.class_products(t.mult, d.class_of, m, K, use_numba=use) for m in d.members]
            ),
        )
    print("all kernels agree" if ok else "KERNEL MISMATCH")
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
