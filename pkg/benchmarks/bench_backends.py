#!/usr/bin/env python3
"""Benchmark the compiled scalar kernel against the pure-Python fallback.

Two views:

* microbenchmarks that drive each kernel module directly (field arithmetic,
  polynomial gcd reduction), and
* an end-to-end run of the full axiom check in a subprocess per backend,
  selected via the HYBRIDHOPF_PURE environment variable.

Usage: python benchmarks/bench_backends.py [--ops 20000] [--repeat 3]
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import time
from fractions import Fraction

from hybridhopf import _scalar_py

try:
    from hybridhopf import _scalar_cy
except ImportError:
    _scalar_cy = None


def _make_operands(mod, count: int):
    rng = random.Random(12345)
    out = []
    for _ in range(count):
        def gaussian():
            return mod.GaussianRational(
                Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
                Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
            )

        num = mod.BPolynomial([gaussian() for _ in range(rng.randint(1, 3))])
        den = mod.BPolynomial([gaussian() for _ in range(rng.randint(1, 3))])
        while not den:
            den = mod.BPolynomial([gaussian()])
        out.append(mod.Scalar(num, den))
    return out


def _bench_field_ops(mod, ops: int) -> float:
    values = _make_operands(mod, 200)
    n = len(values)
    start = time.perf_counter()
    acc = values[0]
    for k in range(ops):
        x = values[k % n]
        y = values[(k * 7 + 3) % n]
        acc = x * y + x - y
        if acc:
            acc = acc.inv()
    return time.perf_counter() - start


def _bench_check_subprocess(pure: bool, repeat: int) -> float:
    env = dict(os.environ)
    env.pop("HYBRIDHOPF_PURE", None)
    if pure:
        env["HYBRIDHOPF_PURE"] = "1"
    cmd = [sys.executable, "-m", "hybridhopf.cli", "check", "--variant", "a"]
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        proc = subprocess.run(cmd, env=env, capture_output=True, text=True)
        elapsed = time.perf_counter() - start
        if proc.returncode != 0:
            raise RuntimeError(f"check failed: {proc.stderr}")
        best = min(best, elapsed)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--ops", type=int, default=5000, help="field operations per kernel")
    parser.add_argument("--repeat", type=int, default=3, help="subprocess repetitions")
    args = parser.parse_args()

    rows = []
    t_py = _bench_field_ops(_scalar_py, args.ops)
    rows.append(("field ops (python)", t_py, args.ops / t_py))
    if _scalar_cy is not None:
        t_cy = _bench_field_ops(_scalar_cy, args.ops)
        rows.append(("field ops (cython)", t_cy, args.ops / t_cy))
        rows.append(("field ops speedup", t_py / t_cy, None))

    c_py = _bench_check_subprocess(pure=True, repeat=args.repeat)
    rows.append(("full check (python)", c_py, None))
    if _scalar_cy is not None:
        c_cy = _bench_check_subprocess(pure=False, repeat=args.repeat)
        rows.append(("full check (cython)", c_cy, None))
        rows.append(("full check speedup", c_py / c_cy, None))

    width = max(len(name) for name, _, _ in rows)
    for name, value, rate in rows:
        if "speedup" in name:
            print(f"{name:<{width}}  {value:6.2f}x")
        elif rate is None:
            print(f"{name:<{width}}  {value * 1000:8.1f} ms")
        else:
            print(f"{name:<{width}}  {value * 1000:8.1f} ms  ({rate:,.0f} ops/s)")
    if _scalar_cy is None:
        print("compiled kernel not built; install with Cython to compare backends")
    return 0


if __name__ == "__main__":
    sys.exit(main())
