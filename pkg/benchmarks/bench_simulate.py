#!/usr/bin/env python3
"""Benchmark the compiled simulation kernel against the pure-Python fallback.

Runs identical workloads through both kernels, asserts the reports match
bit for bit, and prints throughput plus speedup.

Usage: python benchmarks/bench_simulate.py [--trials N] [--seed S]
"""

import argparse
import time

from flipwait.pattern import parse
from flipwait.simulate import kernel_name, simulate_wait

WORKLOADS = [
    ("HH", 2),
    ("HTHT", 2),
    ("HHTTHH", 2),
    ("0,0", 6),
]


def bench(kernel: str, pattern, trials: int, seed: int):
    start = time.perf_counter()
    report = simulate_wait(pattern, trials, seed, kernel=kernel)
    elapsed = time.perf_counter() - start
    return report, elapsed


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=200_000)
    ap.add_argument("--seed", type=int, default=42)
    args = ap.parse_args()

    if kernel_name() != "compiled":
        print("note: compiled kernel not built; benchmarking the fallback against itself")
    kernels = ["python"] + (["compiled"] if kernel_name() == "compiled" else [])

    print(f"{args.trials} trials per pattern, seed {args.seed}")
    header = f"{'pattern':>10} {'mean':>10}" + "".join(f" {k + ' s':>12}" for k in kernels)
    if len(kernels) == 2:
        header += f" {'speedup':>9}"
    print(header)
    for text, alphabet in WORKLOADS:
        p = parse(text, alphabet)
        reports = {}
        times = {}
        for kernel in kernels:
            reports[kernel], times[kernel] = bench(kernel, p, args.trials, args.seed)
        first = reports[kernels[0]]
        assert all(r == first for r in reports.values()), f"kernel mismatch on {text}"
        row = f"{text:>10} {first.mean:>10.4f}" + "".join(f" {times[k]:>12.4f}" for k in kernels)
        if len(kernels) == 2:
            row += f" {times['python'] / times['compiled']:>8.1f}x"
        print(row)
    print("reports bit-identical across kernels")


if __name__ == "__main__":
    main()
