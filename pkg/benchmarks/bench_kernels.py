"""Compare the numba and pure-numpy GF(p) kernels.

Per-kernel timings on random matrices, then an end-to-end run of the
conjugation separator on equivalent pairs (full pivot basis walk). Both
backends are checked to return identical results before anything is timed.

    python benchmarks/bench_kernels.py [--sizes 8 16 32] [--repeat 5] [--json out.json]
"""

from __future__ import annotations

import argparse
import json
import statistics
import time

import numpy as np

from orbitsep import Field, _kernels, separate_conj
from orbitsep.sampling import random_invertible, random_tuple
from orbitsep.tuples import conjugate

PRIMES = (101, 2_147_483_629)


def _best(fn, repeat):
    runs = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        runs.append(time.perf_counter() - t)
    return min(runs), statistics.median(runs)


def kernel_cases(n, p, rng):
    a = rng.integers(0, p, size=(n, n), dtype=np.int64)
    b = rng.integers(0, p, size=(n, n), dtype=np.int64)
    # echelon state with n*n/2 random rows for the reduction kernel
    dim = n * n
    rows = np.zeros((dim, dim), dtype=np.int64)
    pivots = np.arange(dim // 2, dtype=np.int64)
    for i in range(dim // 2):
        rows[i, i] = 1
        rows[i, dim // 2 :] = rng.integers(0, p, size=dim - dim // 2)
    v = rng.integers(0, p, size=dim, dtype=np.int64)
    return {
        "matmul": lambda be: be.matmul(a, b, p),
        "det": lambda be: be.det(a, p),
        "inverse": lambda be: be.inverse(a, p),
        "berkowitz": lambda be: be.berkowitz(a, p),
        "reduce": lambda be: be.reduce(rows, pivots, dim // 2, v, p),
    }


def _same(x, y):
    if isinstance(x, tuple):
        return all(_same(a, b) for a, b in zip(x, y))
    return np.array_equal(np.asarray(x), np.asarray(y))


def bench_kernels(sizes, repeat):
    rng = np.random.default_rng(0)
    rows = []
    for p in PRIMES:
        for n in sizes:
            for name, call in kernel_cases(n, p, rng).items():
                ref = {b: call(_kernels.BACKENDS[b]) for b in _kernels.BACKENDS}
                vals = list(ref.values())
                if not all(_same(vals[0], v) for v in vals[1:]):
                    raise AssertionError(f"backends disagree on {name} n={n} p={p}")
                timing = {b: _best(lambda: call(_kernels.BACKENDS[b]), repeat)[0] for b in _kernels.BACKENDS}
                rows.append({"kernel": name, "n": n, "p": p, **timing})
    return rows


def bench_end_to_end(sizes, repeat):
    F = Field(101)
    rows = []
    for n in sizes:
        A = random_tuple(F, n, 2, seed=n)
        B = conjugate(A, random_invertible(F, n, seed=n + 1))
        timing, verdicts = {}, set()
        for b in _kernels.BACKENDS:
            with _kernels.use_backend(b):
                verdicts.add(separate_conj(A, B).verdict)
                timing[b] = _best(lambda: separate_conj(A, B), repeat)[0]
        assert len(verdicts) == 1
        rows.append({"kernel": "separate_conj", "n": n, "p": 101, **timing})
    return rows


def _print(rows):
    names = sorted(_kernels.BACKENDS)
    head = f"{'kernel':<14}{'n':>4}{'p':>12}" + "".join(f"{b:>12}" for b in names)
    if "numba" in names:
        head += f"{'speedup':>10}"
    print(head)
    for r in rows:
        line = f"{r['kernel']:<14}{r['n']:>4}{r['p']:>12}" + "".join(f"{r[b] * 1e3:>10.3f}ms" for b in names)
        if "numba" in names:
            line += f"{r['numpy'] / r['numba']:>9.1f}x"
        print(line)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[4, 8, 16, 32])
    ap.add_argument("--e2e-sizes", type=int, nargs="+", default=[3, 4, 5, 6])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", default=None)
    args = ap.parse_args(argv)

    t = time.perf_counter()
    _kernels.warmup()
    print(f"backends: {', '.join(sorted(_kernels.BACKENDS))}; warm-up (compile) {time.perf_counter() - t:.2f}s\n")
    rows = bench_kernels(args.sizes, args.repeat)
    rows += bench_end_to_end(args.e2e_sizes, max(1, args.repeat // 2))
    _print(rows)
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2)


if __name__ == "__main__":
    main()
