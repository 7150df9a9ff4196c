"""Benchmark the pure-Python merge kernel against the compiled twin.

Run with ``python -m prefixcode.benchmark``.  Two workload families cover
the arithmetic regimes the package actually hits: geometric truncation
weights (numerators grow to thousands of bits) and random small-int
weights (bookkeeping overhead dominates).
"""

from __future__ import annotations

import argparse
import random
import time

from prefixcode import _kernel_py

try:
    from prefixcode import _kernel_cy
except ImportError:
    _kernel_cy = None


def geometric_weights(n: int) -> list[int]:
    # numerators of the geometric(1/4) truncation over its common denominator
    return [4 ** (n - i) * 3 ** (i - 1) for i in range(1, n + 1)]


def random_weights(n: int, rng: random.Random) -> list[int]:
    return sorted((rng.randint(1, 10**6) for _ in range(n)), reverse=True)


def time_kernel(run_merges, workloads: list[list[int]], repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        for nums in workloads:
            run_merges(nums)
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="64,128,256,512",
                        help="comma-separated truncation sizes")
    parser.add_argument("--batch", type=int, default=50,
                        help="random instances per size")
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    sizes = [int(s) for s in args.sizes.split(",")]
    rng = random.Random(args.seed)

    kernels = [("pure", _kernel_py.run_merges)]
    if _kernel_cy is not None:
        kernels.append(("compiled", _kernel_cy.run_merges))
    else:
        print("compiled kernel not built; timing the pure kernel only")

    header = f"{'workload':<24}{'n':>6}" + "".join(f"{name:>12}" for name, _ in kernels)
    if len(kernels) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))

    for n in sizes:
        rows = [
            ("geometric weights", [geometric_weights(n)]),
            ("random weights", [random_weights(n, rng) for _ in range(args.batch)]),
        ]
        for label, workloads in rows:
            times = [time_kernel(fn, workloads, args.repeats) for _, fn in kernels]
            line = f"{label:<24}{n:>6}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times)
            if len(times) == 2 and times[1] > 0:
                line += f"{times[0] / times[1]:>9.2f}x"
            print(line)

    # the two kernels must agree bit for bit
    if _kernel_cy is not None:
        nums = geometric_weights(128)
        assert _kernel_py.run_merges(nums, True) == _kernel_cy.run_merges(nums, True)
        print("kernels agree on a reference workload")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
