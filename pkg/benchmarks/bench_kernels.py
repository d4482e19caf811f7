"""Compare the compiled and pure-Python polynomial kernels.

    python benchmarks/bench_kernels.py [--repeat 5]

The kernel microbenchmarks call both backends in-process. The end-to-end
row runs the finite-form grid in a subprocess per backend, since the backend
is fixed at import time (QKL_PURE_PYTHON=1 forces the fallback).
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from qkl import _kernels_py as py_k

try:
    from qkl import _kernels as cy_k
except ImportError:
    cy_k = None

GRID_SNIPPET = """
import time
from qkl.identities import verify_finite_form
t = time.perf_counter()
assert all(verify_finite_form(N, r).passed for N in range(1, {n_max} + 1) for r in range(5))
print(time.perf_counter() - t)
"""


def _poly(rng, deg, bits):
    return [rng.getrandbits(bits) - (1 << (bits - 1)) for _ in range(deg + 1)]


def cases(rng):
    a, b = _poly(rng, 200, 20), _poly(rng, 200, 20)
    big_a, big_b = _poly(rng, 120, 200), _poly(rng, 120, 200)
    prod = py_k.mul(a, b)
    f, g = _poly(rng, 60, 30), _poly(rng, 40, 30)
    g[-1] = 1
    return {
        "mul 200x200 small": ("mul", (a, b)),
        "mul 120x120 200-bit": ("mul", (big_a, big_b)),
        "exact_quo 400/200": ("exact_quo", (prod, b)),
        "prem 60/40": ("prem", (f, g)),
        "eval_homogeneous deg 400": ("eval_homogeneous", (prod, 3, 7)),
    }


def bench(fn, args, repeat):
    number = 20
    return min(timeit.repeat(lambda: fn(*args), number=number, repeat=repeat)) / number


def grid(pure, n_max):
    env = dict(os.environ)
    env.pop("QKL_PURE_PYTHON", None)
    if pure:
        env["QKL_PURE_PYTHON"] = "1"
    out = subprocess.run(
        [sys.executable, "-c", GRID_SNIPPET.format(n_max=n_max)], env=env, capture_output=True, text=True, check=True
    )
    return float(out.stdout.strip())


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--grid-n", type=int, default=10, help="largest N in the end-to-end finite-form grid")
    args = ap.parse_args()
    if cy_k is None:
        sys.exit("compiled kernels are not built; run `pip install -e . --no-build-isolation` first")
    rng = random.Random(20240601)
    print(f"{'kernel':28} {'python (us)':>12} {'cython (us)':>12} {'speedup':>8}")
    for label, (name, fargs) in cases(rng).items():
        assert getattr(py_k, name)(*fargs) == getattr(cy_k, name)(*fargs)
        tp = bench(getattr(py_k, name), fargs, args.repeat) * 1e6
        tc = bench(getattr(cy_k, name), fargs, args.repeat) * 1e6
        print(f"{label:28} {tp:12.1f} {tc:12.1f} {tp / tc:8.2f}")
    tp, tc = grid(True, args.grid_n), grid(False, args.grid_n)
    print(f"{f'finite-form grid N<={args.grid_n}, r<=4':28} {tp * 1e6:12.0f} {tc * 1e6:12.0f} {tp / tc:8.2f}")


if __name__ == "__main__":
    main()
