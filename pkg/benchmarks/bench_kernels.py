"""Benchmark the compiled kernels against the pure-numpy fallback.

Times multiply_batch and dirac_batch on identical inputs through both
backends and prints per-call medians plus the speedup.  Results also
double as a parity check: the backends must agree bit for bit.

Usage: python benchmarks/bench_kernels.py [--n 200000] [--repeats 9]
"""

import argparse
import statistics
import time

import numpy as np

from splitoct._kernels import _pykernels
from splitoct.algebra import AlgebraKind
from splitoct.numeric import table_arrays

try:
    from splitoct._kernels import _cykernels
except ImportError:
    _cykernels = None


def time_call(fn, args, repeats):
    samples = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=200_000,
                        help="batch size (rows), default 200000")
    parser.add_argument("--repeats", type=int, default=9,
                        help="timing repeats per case, default 9")
    args = parser.parse_args()

    rng = np.random.default_rng(42)
    signs, targets = table_arrays(AlgebraKind.SPLIT_OCTONION)
    a = rng.uniform(-1, 1, size=(args.n, 8))
    b = rng.uniform(-1, 1, size=(args.n, 8))
    dcoeffs = rng.uniform(-1, 1, size=(args.n, 4, 8))
    basis = np.array([7, 1, 2, 4], dtype=np.int64)

    cases = [
        ("multiply_batch", (signs, targets, a, b)),
        ("dirac_batch", (signs, targets, basis, dcoeffs)),
    ]

    print(f"batch size {args.n}, {args.repeats} repeats, median per call")
    header = f"{'kernel':<16} {'python':>12} {'cython':>12} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for name, case_args in cases:
        py = time_call(getattr(_pykernels, name), case_args, args.repeats)
        if _cykernels is None:
            print(f"{name:<16} {py * 1e3:>10.2f}ms {'n/a':>12} {'n/a':>9}")
            continue
        cy = time_call(getattr(_cykernels, name), case_args, args.repeats)
        match = np.array_equal(getattr(_pykernels, name)(*case_args),
                               getattr(_cykernels, name)(*case_args))
        print(f"{name:<16} {py * 1e3:>10.2f}ms {cy * 1e3:>10.2f}ms "
              f"{py / cy:>8.1f}x" + ("" if match else "  MISMATCH"))
    if _cykernels is None:
        print("compiled extension not available; showing fallback only")


if __name__ == "__main__":
    main()
