"""Compare the compiled elimination kernel against the pure-Python fallback.

Run:  python3 benchmarks/bench_linalg.py
"""

import random
import time
from fractions import Fraction

from quiverforge import _kernels_py

try:
    from quiverforge import _kernels_c
except ImportError:
    _kernels_c = None


def random_matrix(rng, nrows, ncols, bound=9):
    return [
        [Fraction(rng.randint(-bound, bound)) for _ in range(ncols)]
        for _ in range(nrows)
    ]


def bench(kernel, mats, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        work = [[list(row) for row in m] for m in mats]
        start = time.perf_counter()
        for m in work:
            kernel.rref_inplace(m, len(m), len(m[0]))
        best = min(best, time.perf_counter() - start)
    return best


def bench_matmul(kernel, pairs, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        for a, b in pairs:
            kernel.matmul(a, b, len(a), len(b), len(b[0]))
        best = min(best, time.perf_counter() - start)
    return best


def main():
    rng = random.Random(12345)
    sizes = [(40, 60, 10), (72, 72, 6), (120, 150, 2)]
    print(f"{'case':<24}{'python':>12}{'compiled':>12}{'speedup':>10}")
    for nrows, ncols, count in sizes:
        mats = [random_matrix(rng, nrows, ncols) for _ in range(count)]
        t_py = bench(_kernels_py, mats)
        line = f"rref {nrows}x{ncols} x{count:<6}{t_py:>12.4f}"
        if _kernels_c is not None:
            t_c = bench(_kernels_c, mats)
            line += f"{t_c:>12.4f}{t_py / t_c:>9.2f}x"
        else:
            line += f"{'n/a':>12}{'n/a':>10}"
        print(line)
    pairs = [
        (random_matrix(rng, 60, 60), random_matrix(rng, 60, 60)) for _ in range(4)
    ]
    t_py = bench_matmul(_kernels_py, pairs)
    line = f"{'matmul 60x60 x4':<24}{t_py:>12.4f}"
    if _kernels_c is not None:
        t_c = bench_matmul(_kernels_c, pairs)
        line += f"{t_c:>12.4f}{t_py / t_c:>9.2f}x"
    print(line)


if __name__ == "__main__":
    main()
