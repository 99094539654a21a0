"""Time the integer kernels with numba and with the numpy fallback.

The backend is fixed at import, so each one runs in its own interpreter.
Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, time
import numpy as np
from shardpoly import _kernels, type_b

type_b.b_ideal_masks.cache_clear()
t = time.perf_counter(); masks = type_b.b_ideal_masks(3); t_enum = time.perf_counter() - t
type_b.verify_cor131_all(2)  # warm up compilation and caches
times = []
for _ in range({repeat}):
    t = time.perf_counter()
    checked, bad = type_b.verify_cor131_all(3)
    times.append(time.perf_counter() - t)
print(json.dumps({{"backend": _kernels.backend(), "ideals": checked, "mismatches": len(bad),
                  "enumerate_s": t_enum, "sweep_best_s": min(times)}}))
"""


def run(no_numba: bool, repeat: int) -> dict:
    env = dict(os.environ)
    if no_numba:
        env["SHARDPOLY_NO_NUMBA"] = "1"
    else:
        env.pop("SHARDPOLY_NO_NUMBA", None)
    out = subprocess.run([sys.executable, "-c", WORKLOAD.format(repeat=repeat)], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(out.stdout.strip().splitlines()[-1])


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    rows = [run(False, args.repeat), run(True, args.repeat)]
    print(f"{'backend':8} {'ideals':>7} {'bad':>4} {'enumerate s':>12} {'sweep s':>9}")
    for r in rows:
        print(f"{r['backend']:8} {r['ideals']:7d} {r['mismatches']:4d} {r['enumerate_s']:12.3f} {r['sweep_best_s']:9.3f}")
    print("enumerate includes numba compilation on a cold cache; the sweep is timed after a warm-up")
    if rows[0]["backend"] == "numba":
        print(f"speedup on the sweep: {rows[1]['sweep_best_s'] / rows[0]['sweep_best_s']:.1f}x")


if __name__ == "__main__":
    main()
