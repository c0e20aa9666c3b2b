"""Compare the numba and pure-numpy F_p kernels.

    python benchmarks/bench_kernels.py [--sizes 32,64,128] [--p 10007] [--repeat 5]

Both backends are called directly, so the CYCSPEC_NUMBA flag does not
matter here. Results are checked for equality before timing is reported.
"""

import argparse
import time

import numpy as np

from cyclicspec import kernels


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="32,64,128")
    ap.add_argument("--p", type=int, default=10007)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    if not kernels.HAVE_NUMBA:
        print("numba not importable; only the numpy backend can be timed")
    rng = np.random.default_rng(args.seed)
    p = args.p
    print(f"{'kernel':<8} {'n':>5} {'numpy s':>10} {'numba s':>10} {'speedup':>8}")
    for n in (int(s) for s in args.sizes.split(",")):
        a = rng.integers(0, p, size=(n, n + 3), dtype=np.int64)
        b = rng.integers(0, p, size=(n + 3, n), dtype=np.int64)
        cases = [
            ("rref", lambda u: kernels.rref_mod_p(a, p, use_numba=u)),
            ("matmul", lambda u: kernels.matmul_mod_p(a, b, p, use_numba=u)),
        ]
        for name, fn in cases:
            ref = fn(False)
            t_np = best_of(lambda: fn(False), args.repeat)
            if kernels.HAVE_NUMBA:
                out = fn(True)      # also triggers compilation outside the timed region
                same = all(np.array_equal(x, y) for x, y in zip(out, ref)) if isinstance(ref, tuple) \
                    else np.array_equal(out, ref)
                if not same:
                    raise SystemExit(f"{name} n={n}: backends disagree")
                t_nb = best_of(lambda: fn(True), args.repeat)
                print(f"{name:<8} {n:>5} {t_np:>10.5f} {t_nb:>10.5f} {t_np / t_nb:>7.1f}x")
            else:
                print(f"{name:<8} {n:>5} {t_np:>10.5f} {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
