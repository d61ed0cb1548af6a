"""Compare the compiled retrograde-solver kernel against the pure-Python one.

Runs both on the same boxes, checks bit-for-bit agreement, and reports wall
times and speedup.  Usage:

    python benchmarks/bench_solver.py [--bound N] [--n DIM] [--repeat R]
"""

from __future__ import annotations

import argparse
import time

from wythoff import _solver_py
from wythoff.engine import canonical_spec

try:
    from wythoff import _solver_cy
except ImportError:
    _solver_cy = None


def run_kernel(kernel, n: int, bound: int, vectors) -> tuple[bytes, float]:
    cells = bound**n
    bits = bytearray((cells + 7) >> 3)
    t0 = time.perf_counter()
    kernel.solve_into_bits(n, bound, vectors, bits)
    return bytes(bits), time.perf_counter() - t0


def bench_case(n: int, bound: int, repeat: int) -> None:
    spec = canonical_spec(n)
    cells = bound**n
    print(f"n={n} bound={bound} ({cells} cells)")

    py_bits, py_best = None, float("inf")
    for _ in range(repeat):
        py_bits, t = run_kernel(_solver_py, n, bound, spec.vectors)
        py_best = min(py_best, t)
    print(f"  python : {py_best * 1000:10.1f} ms")

    if _solver_cy is None:
        print("  cython : not built")
        return

    cy_bits, cy_best = None, float("inf")
    for _ in range(repeat):
        cy_bits, t = run_kernel(_solver_cy, n, bound, spec.vectors)
        cy_best = min(cy_best, t)
    agree = "ok" if cy_bits == py_bits else "MISMATCH"
    print(f"  cython : {cy_best * 1000:10.1f} ms   agreement: {agree}")
    print(f"  speedup: {py_best / cy_best:10.1f}x")
    if agree != "ok":
        raise SystemExit("kernel outputs disagree")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--bound", type=int, default=None, help="run one custom case")
    parser.add_argument("--n", type=int, default=3)
    args = parser.parse_args()

    if args.bound is not None:
        bench_case(args.n, args.bound, args.repeat)
        return
    for n, bound in [(2, 256), (3, 64), (3, 128), (5, 16)]:
        bench_case(n, bound, args.repeat)


if __name__ == "__main__":
    main()
