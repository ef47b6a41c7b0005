"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Times the merge and bitset sumset paths on a few input shapes, then the
endomorphism suite end to end under each backend (in a subprocess, so the
backend is chosen at import as in normal use).
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from pfinz import kernels

SUITE_SNIPPET = (
    "import time; from pfinz import oracle; c = oracle.enumerate_corpus(-3, 3, 3); "
    "t = time.perf_counter(); r = oracle.suite_endomorphism(2, c); "
    "assert r.passed; print(time.perf_counter() - t)"
)


def _random_set(rng, size, span):
    return tuple(sorted(rng.sample(range(-span // 2, span // 2), size)))


def cases(rng):
    yield "merge, 50 + 50 sparse", "sumset_merge", _random_set(rng, 50, 10**9), _random_set(rng, 50, 10**9)
    yield "merge, 400 + 400 sparse", "sumset_merge", _random_set(rng, 400, 10**9), _random_set(rng, 400, 10**9)
    yield "bitset, 50 + 50 in 2000", "sumset_bitset", _random_set(rng, 50, 2000), _random_set(rng, 50, 2000)
    yield "bitset, 400 + 400 in 2000", "sumset_bitset", _random_set(rng, 400, 2000), _random_set(rng, 400, 2000)
    yield "dispatch, 3 + 3 small", "sumset", (0, 1, 3), (-2, 0, 5)


def bench_kernels(repeat):
    rng = random.Random(0)
    backends = kernels.available_backends()
    names = sorted(backends)
    print(f"{'case':28}" + "".join(f"{n:>14}" for n in names) + ("      speedup" if len(names) == 2 else ""))
    for label, fn, xs, ys in cases(rng):
        times = {}
        for name in names:
            f = getattr(backends[name], fn)
            args = (xs, ys, 4096) if fn == "sumset" else (xs, ys)
            number = 200
            times[name] = min(timeit.repeat(lambda: f(*args), number=number, repeat=repeat)) / number
        row = f"{label:28}" + "".join(f"{times[n] * 1e6:11.1f} us" for n in names)
        if len(names) == 2:
            row += f"{times['python'] / times['cython']:12.1f}x"
        print(row)


def bench_suite():
    print("\nendomorphism suite (20 descriptors over corpus(-3,3,3)):")
    for name, pure in (("cython", "0"), ("python", "1")):
        if name not in kernels.available_backends():
            continue
        env = dict(os.environ, PFINZ_PURE_PYTHON=pure)
        out = subprocess.run([sys.executable, "-c", SUITE_SNIPPET], env=env, capture_output=True, text=True, check=True)
        print(f"  {name:8} {float(out.stdout):.3f} s")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    print(f"active backend: {kernels.BACKEND}\n")
    bench_kernels(args.repeat)
    bench_suite()


if __name__ == "__main__":
    main()
