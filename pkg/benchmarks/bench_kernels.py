"""Compare the compiled kernel extension against the pure-Python fallback.

Runs the same exact-arithmetic workloads through both backends and prints a
timing table.  Results are identical by construction (both backends are
bit-for-bit the same algorithm); only the wall time differs.

Usage: python benchmarks/bench_kernels.py [--r 4] [--repeat 3]
"""

from __future__ import annotations

import argparse
import importlib
import os
import subprocess
import sys
import time

WORKLOAD = """
import time
import spincas
from spincas import casimir, spectra
from spincas.linalg import ExactMatrix

r = {r}
timings = {{}}

t0 = time.perf_counter()
c = casimir.split_casimir_rho(r).matrix
timings["build split Casimir"] = time.perf_counter() - t0

t0 = time.perf_counter()
sq = c @ c
timings["matrix square (dim %d)" % c.dim] = time.perf_counter() - t0

t0 = time.perf_counter()
block = casimir.sector_casimir(r, "++").matrix
powers = [ExactMatrix.identity(block.dim)]
for _ in range(r + 1):
    powers.append(powers[-1] @ block)
timings["sector powers 0..%d" % (r + 1)] = time.perf_counter() - t0

t0 = time.perf_counter()
for sector in casimir.SECTORS:
    spectra.sector_spectral(r, sector)
timings["eigenprojectors + ranks"] = time.perf_counter() - t0

print(spincas.BACKEND)
for name, dt in timings.items():
    print("%s\\t%.4f" % (name, dt))
"""


def run_backend(backend_env: str, r: int) -> dict[str, float]:
    env = dict(os.environ)
    if backend_env:
        env["SPINCAS_KERNEL"] = backend_env
    else:
        env.pop("SPINCAS_KERNEL", None)
    out = subprocess.run(
        [sys.executable, "-c", WORKLOAD.format(r=r)],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    ).stdout.splitlines()
    label = out[0]
    timings = {}
    for line in out[1:]:
        name, dt = line.rsplit("\t", 1)
        timings[name] = float(dt)
    return {"backend": label, "timings": timings}


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--r", type=int, default=4)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    compiled_available = (
        importlib.util.find_spec("spincas._kernels_cy") is not None
    )
    if not compiled_available:
        print("compiled extension not built; benchmarking fallback only")

    results = {}
    for label, env in (("compiled", ""), ("python", "python")):
        if label == "compiled" and not compiled_available:
            continue
        best: dict[str, float] = {}
        reported = None
        for _ in range(args.repeat):
            run = run_backend(env, args.r)
            reported = run["backend"]
            for name, dt in run["timings"].items():
                best[name] = min(best.get(name, dt), dt)
        if reported != label:
            print(f"warning: requested {label} backend, got {reported}")
        results[label] = best

    names = list(next(iter(results.values())))
    width = max(len(n) for n in names) + 2
    header = f"{'workload (r=%d)' % args.r:<{width}}" + "".join(
        f"{k:>12}" for k in results
    )
    if len(results) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for name in names:
        row = f"{name:<{width}}"
        for timings in results.values():
            row += f"{timings[name]:>11.4f}s"
        if len(results) == 2:
            ratio = results["python"][name] / max(results["compiled"][name], 1e-9)
            row += f"{ratio:>9.2f}x"
        print(row)
    return 0


if __name__ == "__main__":
    sys.exit(main())
