#!/usr/bin/env python3
# bench_kernels.py
"""Compare the numba-compiled kernels against the pure-Python fallback.

Runs the same workload twice in subprocesses, once per KGSCATTER_NUMBA
setting, and prints a timing table.  The workload exercises the three hot
paths: closed-form matching (hypergeometric series + transformations),
direct scattering integration, and the bound-state residual scan.

Usage: python3 benchmarks/bench_kernels.py [--quick]
"""

import argparse
import json
import os
import subprocess
import sys

_WORKLOAD = r"""
import json, os, sys, time
import numpy as np
import kgscatter
from kgscatter import (PotentialParams, WellParams, solve_matching,
                       integrate_scattering, quantization_residual)
from kgscatter._jit import USE_NUMBA

n_match, n_oracle, n_resid = map(int, sys.argv[1:4])
p = PotentialParams(lam=2.0, q=1.5, alpha=1.0, mass=1.0)
w = WellParams(v0=10.0, q=1.0, alpha=1.0, mass=1.0)

# warm up (includes jit compile when enabled)
t0 = time.perf_counter()
solve_matching(1.5, p); integrate_scattering(1.5, p)
quantization_residual(0.0, w)
warm = time.perf_counter() - t0

grid = np.linspace(1.05, 4.0, n_match)
t0 = time.perf_counter()
for E in grid:
    solve_matching(float(E), p)
t_match = time.perf_counter() - t0

grid = np.linspace(1.05, 4.0, n_oracle)
t0 = time.perf_counter()
for E in grid:
    integrate_scattering(float(E), p)
t_oracle = time.perf_counter() - t0

grid = np.linspace(-0.999, 0.999, n_resid)
t0 = time.perf_counter()
for E in grid:
    quantization_residual(float(E), w)
t_resid = time.perf_counter() - t0

print(json.dumps({"numba": USE_NUMBA, "warmup_s": warm,
                  "match_s": t_match, "oracle_s": t_oracle,
                  "residual_s": t_resid}))
"""


def run(numba_flag: str, sizes) -> dict:
    env = dict(os.environ, KGSCATTER_NUMBA=numba_flag)
    out = subprocess.run(
        [sys.executable, "-c", _WORKLOAD, *map(str, sizes)],
        env=env, capture_output=True, text=True, check=True,
    )
    return json.loads(out.stdout.strip().splitlines()[-1])


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true",
                    help="smaller workload (fallback mode is slow)")
    args = ap.parse_args()
    sizes = (200, 50, 100) if args.quick else (1000, 200, 400)

    print(f"workload: {sizes[0]} matchings, {sizes[1]} integrations, "
          f"{sizes[2]} residuals\n")
    rows = []
    for flag, label in (("1", "numba"), ("0", "pure python")):
        r = run(flag, sizes)
        assert r["numba"] == (flag == "1"), "KGSCATTER_NUMBA not honored"
        rows.append((label, r))

    header = f"{'path':>14} | {'warmup':>9} | {'matching':>9} | {'oracle':>9} | {'residual':>9}"
    print(header)
    print("-" * len(header))
    for label, r in rows:
        print(f"{label:>14} | {r['warmup_s']:>8.2f}s | {r['match_s']:>8.3f}s "
              f"| {r['oracle_s']:>8.3f}s | {r['residual_s']:>8.3f}s")
    base, fast = rows[1][1], rows[0][1]
    for key, name in (("match_s", "matching"), ("oracle_s", "oracle"),
                      ("residual_s", "residual")):
        if fast[key] > 0:
            print(f"{name} speedup: {base[key] / fast[key]:.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
