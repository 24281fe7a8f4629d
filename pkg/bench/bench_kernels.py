"""Compare the numba kernels with their numpy / pure-Python fallbacks.

    python bench/bench_kernels.py [--repeat N]

Both variants are imported from the same module, so the environment flag
does not matter here.  Compile time is excluded by a warm-up call.
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from swcross import _kernels as K


def _wedge_inputs(rng, b1, n):
    xm = np.unique(rng.integers(0, 2**b1, size=n, dtype=np.uint64))
    ym = np.unique(rng.integers(0, 2**b1, size=n, dtype=np.uint64))
    return xm, rng.integers(-9, 10, size=xm.size), ym, rng.integers(-9, 10, size=ym.size)


def _time(fn, repeat):
    fn()
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if not K.NUMBA_AVAILABLE:
        print("numba is not installed; nothing to compare")
        return 1
    K.warmup()
    rng = np.random.default_rng(0)
    cases = []
    for b1, n in ((8, 64), (12, 400), (16, 2000)):
        xm, xc, ym, yc = _wedge_inputs(rng, b1, n)
        cases.append((f"wedge b1={b1} terms~{n}",
                      lambda xm=xm, xc=xc, ym=ym, yc=yc: K.wedge_int64_numba(xm, xc, ym, yc),
                      lambda xm=xm, xc=xc, ym=ym, yc=yc: K.wedge_int64_numpy(xm, xc, ym, yc)))
    for r, d in ((3, 30), (4, 20), (5, 16)):
        target = d * (d + 3) // 2
        cases.append((f"triangular solutions r={r} d={d}",
                      lambda r=r, target=target: K.triangular_solutions_numba(r, target, 10**6),
                      lambda r=r, target=target: K.triangular_solutions_numpy(r, target, 10**6)))
        cases.append((f"triangular count r={r} d<={d}",
                      lambda r=r, d=d: [K.triangular_count_numba(r, e * (e + 3) // 2) for e in range(d + 1)],
                      lambda r=r, d=d: [K.triangular_count_numpy(r, e * (e + 3) // 2) for e in range(d + 1)]))
    width = max(len(c[0]) for c in cases)
    print(f"{'kernel'.ljust(width)}  {'numba [ms]':>11}  {'numpy [ms]':>11}  {'speedup':>8}")
    for name, fast, slow in cases:
        a = _time(fast, args.repeat) * 1e3
        b = _time(slow, args.repeat) * 1e3
        print(f"{name.ljust(width)}  {a:11.3f}  {b:11.3f}  {b / a:7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
