"""Compare the compiled and pure-Python polynomial kernels.

Kernel timings call both modules directly on identical inputs. The
end-to-end timing runs ``verify_iso`` over the catalog in a subprocess,
once with the default backend and once with ``PVALGEBRA_PURE=1``.

    python3 benchmarks/bench_kernels.py [--repeat N] [--no-e2e]
"""

import argparse
import os
import random
import subprocess
import sys
import timeit
from fractions import Fraction

from pvalgebra import _pykernels

try:
    from pvalgebra import _ckernels
except ImportError:
    _ckernels = None


def random_terms(rng, nvars=4, nterms=60, degree=6):
    out = {}
    while len(out) < nterms:
        e = tuple(rng.randint(0, degree) for _ in range(nvars))
        out[e] = Fraction(rng.randint(-50, 50) or 1, rng.randint(1, 12))
    return out


def kernel_cases(rng):
    a, b = random_terms(rng), random_terms(rng)
    ops = [("shear", i, i - 1, Fraction(-1)) for i in range(1, 4)]
    ops += [("shift", i, Fraction(-i, 4)) for i in range(4)]
    return {
        "mul 60x60 terms": lambda k: k.mul_terms(a, b),
        "shift by 3/4": lambda k: k.shift_terms(a, 2, Fraction(3, 4)),
        "shear v1 += v0": lambda k: k.shear_terms(a, 1, 0, Fraction(1)),
        "affine, 7 steps": lambda k: k.affine_terms(a, ops),
        "diff twice": lambda k: k.diff_terms(a, 0, 2),
    }


def time_case(func, kernels, repeat):
    number = 20
    return min(timeit.repeat(lambda: func(kernels), number=number, repeat=repeat)) / number


E2E = ("import time; from pvalgebra import BACKEND, CATALOG, verify_iso; s = time.perf_counter(); "
       "ok = all(verify_iso(p, trials=30).passed for p in CATALOG if p.n <= 3); "
       "print(BACKEND, ok, round(time.perf_counter() - s, 2))")


def end_to_end(pure: bool) -> str:
    env = dict(os.environ)
    if pure:
        env["PVALGEBRA_PURE"] = "1"
    else:
        env.pop("PVALGEBRA_PURE", None)
    out = subprocess.run([sys.executable, "-c", E2E], env=env, capture_output=True, text=True, check=True)
    return out.stdout.strip()


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--no-e2e", action="store_true", help="skip the verify_iso comparison")
    args = parser.parse_args(argv)

    cases = kernel_cases(random.Random(args.seed))
    print(f"{'kernel':<18} {'python (ms)':>12} {'compiled (ms)':>14} {'speedup':>8}")
    for name, func in cases.items():
        py = time_case(func, _pykernels, args.repeat)
        if _ckernels is None:
            print(f"{name:<18} {py * 1e3:>12.3f} {'n/a':>14} {'':>8}")
            continue
        assert func(_ckernels) == func(_pykernels), name
        c = time_case(func, _ckernels, args.repeat)
        print(f"{name:<18} {py * 1e3:>12.3f} {c * 1e3:>14.3f} {py / c:>7.1f}x")
    if _ckernels is None:
        print("compiled extension not built; only the Python kernels were timed")

    if not args.no_e2e:
        print()
        print("verify_iso over the catalog, 30 pairs each: backend, passed, seconds")
        print("  " + end_to_end(pure=False))
        print("  " + end_to_end(pure=True))


if __name__ == "__main__":
    main()
