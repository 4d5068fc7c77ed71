#!/usr/bin/env python3
"""Compare the compiled and pure-Python kernels on the hot paths.

Runs each workload on both backends and prints the wall time per run and
the speedup.  The arithmetic itself is CPython big-int work in both
cases; the compiled module removes interpreter loop overhead, so the
biggest gains show on the many-small-operation scans.

    python3 benchmarks/bench_backends.py [--repeat N] [--hi N]
"""

import argparse
import time

import seqident._kernels_py as pure
from seqident.sequences import FIBONACCI, LUCAS, eval_range

try:
    import seqident._kernels as compiled
except ImportError:
    compiled = None


def time_call(func, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        func()
        best = min(best, time.perf_counter() - t0)
    return best


def workloads(hi):
    fibs = eval_range(FIBONACCI, 0, hi)
    lucs = eval_range(LUCAS, 0, hi)
    coeffs = [1, 1]
    window = [1, 1]
    return [
        ("fib_pair(10**6)",
         lambda k: k.fib_pair(10 ** 6)),
        (f"fill_forward x{hi}",
         lambda k: k.fill_forward(coeffs, window, hi)),
        (f"dot_product len {hi}",
         lambda k: k.dot_product(fibs, lucs)),
        (f"convolution_values 2..{hi}",
         lambda k: k.convolution_values(lucs, fibs, 2, hi)),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3, help="runs per timing (best-of)")
    ap.add_argument("--hi", type=int, default=2000, help="range scan upper bound")
    args = ap.parse_args()

    if compiled is None:
        print("compiled kernels not built; showing pure-Python timings only")

    print(f"{'workload':<30} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}")
    for label, work in workloads(args.hi):
        t_pure = time_call(lambda: work(pure), args.repeat)
        if compiled is None:
            print(f"{label:<30} {t_pure:>10.4f} {'-':>13} {'-':>8}")
            continue
        t_comp = time_call(lambda: work(compiled), args.repeat)
        speedup = t_pure / t_comp if t_comp > 0 else float("inf")
        print(f"{label:<30} {t_pure:>10.4f} {t_comp:>13.4f} {speedup:>7.2f}x")


if __name__ == "__main__":
    main()
