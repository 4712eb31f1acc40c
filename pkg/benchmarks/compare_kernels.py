"""Benchmark the compiled search kernel against the pure-Python twin.

Runs the same workloads through both backends by re-importing edgesym with
EDGESYM_KERNEL forced, in subprocesses so the import-time selection is real.

    python benchmarks/compare_kernels.py
"""

from __future__ import annotations

import json
import os
import subprocess
import sys

WORKLOADS = """
import time, json
results = {}

def bench(name, fn, repeat=1):
    t0 = time.perf_counter()
    for _ in range(repeat):
        fn()
    results[name] = (time.perf_counter() - t0) / repeat

from edgesym import kernel
from edgesym.graph import petersen, circulant, complete_bipartite, random_regular, cycle
from edgesym.aut import group_order, stabiliser_generators
from edgesym.layered import colour_regular
from edgesym.distinguishing import distinguishing_index
from edgesym.catalog import connected_regular_graphs

bench("group_order(petersen)", lambda: group_order(petersen()), 5)
bench("stabilisers(circulant(14,{1,2,3}))",
      lambda: stabiliser_generators(circulant(14, [1, 2, 3]), 0), 3)
bench("colour_regular(K55, verify)",
      lambda: colour_regular(complete_bipartite(5, 5), verify=True), 3)
bench("colour_regular(circulant(12,{1,2,3}), verify)",
      lambda: colour_regular(circulant(12, [1, 2, 3]), verify=True), 3)
bench("dprime over cubic(8)",
      lambda: [distinguishing_index(g) for g in connected_regular_graphs(8, 3)], 3)
bench("dprime(C12)", lambda: distinguishing_index(cycle(12)), 3)
bench("dprime(random_regular(14,3))",
      lambda: distinguishing_index(random_regular(14, 3, seed=11)), 3)

print(json.dumps({"backend": kernel.BACKEND, "results": results}))
"""


def run(backend: str) -> dict:
    env = dict(os.environ, EDGESYM_KERNEL=backend)
    out = subprocess.run(
        [sys.executable, "-c", WORKLOADS], env=env, capture_output=True, text=True
    )
    if out.returncode != 0:
        raise RuntimeError(f"backend {backend} failed:\n{out.stderr}")
    return json.loads(out.stdout.strip().splitlines()[-1])


def main() -> None:
    py = run("py")
    try:
        cc = run("c")
    except RuntimeError as exc:
        print(f"compiled kernel unavailable ({exc}); nothing to compare")
        return
    assert py["backend"] == "python" and cc["backend"] == "c"
    width = max(len(k) for k in py["results"])
    print(f"{'workload':<{width}}  {'python':>10}  {'compiled':>10}  {'speedup':>8}")
    for name, tpy in py["results"].items():
        tc = cc["results"][name]
        print(f"{name:<{width}}  {tpy:>9.4f}s  {tc:>9.4f}s  {tpy / tc:>7.2f}x")


if __name__ == "__main__":
    main()
