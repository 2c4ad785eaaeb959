"""Benchmark: compiled vs pure-Python normal-form kernel.

Runs identical random-word workloads through both kernels and reports
wall-clock per type. Usage: python benchmarks/bench_nfcore.py [--words N]
"""

from __future__ import annotations

import argparse
import random
import time

from braidquiver import _nfcore
from braidquiver.weyl import DynkinType, weyl_table

try:
    from braidquiver import _nfcore_c
except ImportError:
    _nfcore_c = None


def workload(dtype: DynkinType, count: int, length: int) -> list[list[int]]:
    rng = random.Random(99)
    n = dtype.rank
    return [
        [rng.choice((1, -1)) * rng.randint(1, n) for _ in range(rng.randint(0, length))]
        for _ in range(count)
    ]


def run(kernel, dtype: DynkinType, words: list[list[int]]) -> float:
    table = weyl_table(dtype)
    start = time.perf_counter()
    for word in words:
        kernel.normal_form_core(
            0, [], word, table.n, table.rm, table.lm, table.rd, table.ld,
            table.tau, table.gen, table.w0_gen, table.w0,
        )
    return time.perf_counter() - start


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--words", type=int, default=2000)
    parser.add_argument("--length", type=int, default=60)
    parser.add_argument("--types", default="A3,A5,D4,D5,E6")
    args = parser.parse_args()

    print(f"{'type':>6} {'words':>7} {'python':>10} {'cython':>10} {'speedup':>8}")
    for name in args.types.split(","):
        dtype = DynkinType.parse(name.strip())
        words = workload(dtype, args.words, args.length)
        py = run(_nfcore, dtype, words)
        if _nfcore_c is None:
            print(f"{name:>6} {len(words):>7} {py:>9.3f}s {'n/a':>10} {'':>8}")
            continue
        cy = run(_nfcore_c, dtype, words)
        for word in words[:200]:  # parity spot check while we are here
            a = _nfcore.normal_form_core(
                0, [], word, *(getattr(weyl_table(dtype), f) for f in
                               ("n", "rm", "lm", "rd", "ld", "tau", "gen", "w0_gen", "w0")))
            b = _nfcore_c.normal_form_core(
                0, [], word, *(getattr(weyl_table(dtype), f) for f in
                               ("n", "rm", "lm", "rd", "ld", "tau", "gen", "w0_gen", "w0")))
            assert a[0] == b[0] and list(a[1]) == list(b[1])
        print(f"{name:>6} {len(words):>7} {py:>9.3f}s {cy:>9.3f}s {py / cy:>7.1f}x")


if __name__ == "__main__":
    main()
