"""Compare the compiled and pure-Python arithmetic kernels.

Micro-benchmarks time the two kernel functions directly on representative
shapes; the end-to-end benchmark runs a classification scan in a child
process with and without LZERO_PURE=1.

Usage: python benchmarks/bench_kernels.py [--repeat N] [--no-e2e]
"""

import argparse
import os
import random
import statistics
import subprocess
import sys
import time

from lzero import _kernels_py

try:
    from lzero import _kernels_cy
except ImportError:
    _kernels_cy = None


def _poly_rem(poly, monic):
    rem = list(poly)
    d = len(monic) - 1
    while len(rem) > d:
        top = rem.pop()
        if top:
            for i in range(d):
                rem[-d + i] -= top * monic[i]
    return rem + [0] * (d - len(rem))


def _rows_for(monic):
    d = len(monic) - 1
    return [_poly_rem([0] * (d + m) + [1], monic) for m in range(d - 1)]


def _time(fn, repeat):
    best = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best.append(time.perf_counter() - t0)
    return statistics.median(best)


def bench_poly(repeat):
    rng = random.Random(1)
    cases = []
    for d in (4, 16, 48):
        monic = [rng.randrange(-5, 6) for _ in range(d)] + [1]
        rows = _rows_for(monic)
        a = [rng.randrange(-(10**30), 10**30) for _ in range(d)]
        b = [rng.randrange(-(10**30), 10**30) for _ in range(d)]
        mod = 5**64
        cases.append((f"poly_mul_reduce d={d:>2}", (a, b, rows, mod)))
    out = []
    for label, args in cases:
        loops = 2000 if "d= 4" in label else 300

        def run(impl, args=args, loops=loops):
            for _ in range(loops):
                impl.poly_mul_reduce(*args)

        py = _time(lambda: run(_kernels_py), repeat)
        cy = _time(lambda: run(_kernels_cy), repeat) if _kernels_cy else None
        out.append((label, loops, py, cy))
    return out


def bench_tower(repeat):
    rng = random.Random(2)
    out = []
    for e, f in ((4, 2), (6, 4), (10, 6)):
        mod = 3**40
        g = [rng.randrange(mod) for _ in range(f)] + [1]
        eis = [rng.randrange(mod) for _ in range(e)] + [1]
        grows = _rows_for(g)
        erows = _rows_for(eis)
        amat = [[rng.randrange(mod) for _ in range(f)] for _ in range(e)]
        bmat = [[rng.randrange(mod) for _ in range(f)] for _ in range(e)]
        loops = 500

        def run(impl):
            for _ in range(loops):
                impl.tower_mul(amat, bmat, grows, erows, mod)

        py = _time(lambda: run(_kernels_py), repeat)
        cy = _time(lambda: run(_kernels_cy), repeat) if _kernels_cy else None
        out.append((f"tower_mul e={e} f={f}", loops, py, cy))
    return out


def bench_end_to_end():
    code = "import lzero; lzero.nonintegral_locus_scan(40, 13)"
    results = {}
    for label, env_extra in (("compiled", {}), ("pure", {"LZERO_PURE": "1"})):
        env = dict(os.environ, **env_extra)
        t0 = time.perf_counter()
        subprocess.run([sys.executable, "-c", code], check=True, env=env)
        results[label] = time.perf_counter() - t0
    return results


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=5, help="timing repetitions")
    ap.add_argument("--no-e2e", action="store_true", help="skip the subprocess run")
    args = ap.parse_args()

    if _kernels_cy is None:
        print("note: compiled backend not importable; timing pure Python only\n")

    print(f"{'case':<24} {'loops':>6} {'python':>10} {'cython':>10} {'speedup':>8}")
    for label, loops, py, cy in bench_poly(args.repeat) + bench_tower(args.repeat):
        cy_s = f"{cy:>10.4f}" if cy is not None else f"{'-':>10}"
        ratio = f"{py / cy:>7.2f}x" if cy else f"{'-':>8}"
        print(f"{label:<24} {loops:>6} {py:>10.4f} {cy_s} {ratio}")

    if not args.no_e2e:
        print("\nend-to-end: nonintegral_locus_scan(40, 13) in a fresh process")
        res = bench_end_to_end()
        for label, secs in res.items():
            print(f"  {label:<10} {secs:>8.2f} s")
        if "compiled" in res and "pure" in res:
            print(f"  ratio      {res['pure'] / res['compiled']:>8.2f}x")


if __name__ == "__main__":
    main()
