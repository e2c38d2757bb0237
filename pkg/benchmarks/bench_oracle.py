"""Compare the compiled enumeration kernel against its pure-Python twin.

The workload is the full small-bundle grid: every integral big-not-ample
class with coefficients up to 6 on every bundle with m <= 4, b1 <= 3,
fiber rank <= 3 and base dimension <= 3, enumerated with d <= 6 and
c <= 40.  Both backends must return identical tuples on every call;
the script reports wall time and the speedup.

Run:  python3 benchmarks/bench_oracle.py
"""

import itertools
import time

from foliadex._kernels import _compiled, oracle_py

D_MAX = 6
C_MAX = 40


def build_workload():
    calls = []
    for rprime in range(1, 4):
        for b_ascending in itertools.combinations_with_replacement(range(4), rprime):
            b1 = b_ascending[-1]
            for m in range(1, 5):
                for beta in range(1, 7):
                    for gamma in range(-6, 7):
                        big = gamma > -m * beta
                        ample = gamma > b1 * beta
                        if big and not ample:
                            calls.append((beta, gamma, 1, m, b1, D_MAX, C_MAX))
    return calls


def run(kernel, calls):
    start = time.perf_counter()
    results = [kernel.best_index_bound(*args) for args in calls]
    return time.perf_counter() - start, results


def main():
    calls = build_workload()
    print(f"workload: {len(calls)} kernel calls (d <= {D_MAX}, c <= {C_MAX})")

    pure_time, pure_results = run(oracle_py, calls)
    print(f"pure python: {pure_time:.3f}s")

    if _compiled is None:
        print("compiled kernel not available; nothing to compare")
        return

    compiled_time, compiled_results = run(_compiled, calls)
    print(f"compiled:    {compiled_time:.3f}s")

    mismatches = sum(1 for a, b in zip(pure_results, compiled_results) if a != b)
    if mismatches:
        raise SystemExit(f"{mismatches} calls disagree between the backends")
    print(f"agreement:   all {len(calls)} results identical")
    print(f"speedup:     {pure_time / compiled_time:.1f}x")


if __name__ == "__main__":
    main()
