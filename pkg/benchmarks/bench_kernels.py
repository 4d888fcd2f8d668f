"""Compare the compiled and pure-Python enumeration kernels.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import timeit

from coxq import _kernels_py

try:
    from coxq import _ckernels
except ImportError:
    _ckernels = None

CASES = [(3, 80), (4, 30), (5, 20), (6, 15)]


def sample_windows(n, max_len):
    levels = _kernels_py.ball_levels(n, max_len, tuple(range(n)), 10**7)
    return [w for level in levels for w in level]


def bench(impl, n, max_len, windows, repeat):
    gens = tuple(range(n))
    ball = min(timeit.repeat(lambda: impl.ball_levels(n, max_len, gens, 10**7), number=1, repeat=repeat))
    length = min(timeit.repeat(lambda: [impl.window_length(w, n) for w in windows], number=1, repeat=repeat))
    return ball, length


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    impls = [("python", _kernels_py)] + ([("cython", _ckernels)] if _ckernels else [])
    print(f"{'n':>2} {'L':>3} {'elements':>9} {'impl':>7} {'ball (s)':>9} {'lengths (s)':>11}")
    for n, max_len in CASES:
        windows = sample_windows(n, max_len)
        timings = {}
        for name, impl in impls:
            timings[name] = bench(impl, n, max_len, windows, args.repeat)
            b, l = timings[name]
            print(f"{n:>2} {max_len:>3} {len(windows):>9} {name:>7} {b:>9.4f} {l:>11.4f}")
        if len(timings) == 2:
            (pb, pl), (cb, cl) = timings["python"], timings["cython"]
            print(f"{'':>24} speedup  ball x{pb / cb:.1f}  lengths x{pl / cl:.1f}")
    if _ckernels is None:
        print("compiled kernels not built; only the fallback was timed")


if __name__ == "__main__":
    main()
