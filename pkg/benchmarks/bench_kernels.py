"""Times the compiled and pure-Python Freudenthal kernels on the same inputs.

Run with ``python3 benchmarks/bench_kernels.py``; both backends must agree.
"""

import argparse
import time

from irrsub import _kernels_py
from irrsub.rootsys import SimpleType, build_root_datum

try:
    from irrsub import _kernels as _compiled
except ImportError:
    _compiled = None

CASES = [
    ("A2", (6, 6)),
    ("B3", (2, 2, 2)),
    ("G2", (5, 5)),
    ("F4", (1, 1, 0, 1)),
    ("E6", (1, 1, 0, 0, 1, 1)),
    ("E7", (1, 0, 0, 0, 0, 1, 1)),
    ("E8", (1, 0, 0, 0, 0, 0, 1, 0)),
    ("E8", (0, 0, 0, 0, 0, 0, 2, 1)),
]


def _time(fn, args, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _compiled is None:
        print("compiled kernel not built; only the Python kernel is available")
    print(f"{'type':<4} {'weight':<26} {'dominant':>8} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, lam in CASES:
        d = build_root_datum(SimpleType.parse(name))
        inputs = (d.cartan, d.norms, d.positive_roots, d.roots_fund, lam)
        tp, ref = _time(_kernels_py.dominant_multiplicities, inputs, args.repeat)
        if _compiled is None:
            print(f"{name:<4} {str(lam):<26} {len(ref):>8} {tp:>10.4f}")
            continue
        tc, got = _time(_compiled.dominant_multiplicities, inputs, args.repeat)
        if got != ref:
            raise SystemExit(f"backends disagree on {name} {lam}")
        print(f"{name:<4} {str(lam):<26} {len(ref):>8} {tp:>10.4f} {tc:>10.4f} {tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()
