"""Compare the compiled and numpy near-isosceles scan kernels.

    python benchmarks/bench_scan.py --sizes 1e6 1e7 1e8 --repeat 3

Also times the three term evaluators on the Mills sequence for large n.
"""

import argparse
import time

from linrec.apps import MILLS
from linrec.kernels import BACKEND, available_backends, scan_near_isosceles
from linrec.recurrence import eval_closed, eval_iterative, eval_matrix, solve


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", nargs="+", type=float, default=[1e6, 1e7, 1e8])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--terms", nargs="+", type=int, default=[10**3, 10**4, 10**5])
    args = ap.parse_args()

    backends = available_backends()
    print(f"default backend: {BACKEND}")
    print(f"{'x_max':>12} " + " ".join(f"{b:>12}" for b in backends) + "     speedup")
    for size in args.sizes:
        x_max = int(size)
        times = {
            b: best_of(lambda: scan_near_isosceles(x_max, backend=b, workers=args.workers),
                       args.repeat)
            for b in backends
        }
        row = f"{x_max:>12} " + " ".join(f"{times[b]:>11.3f}s" for b in backends)
        if "compiled" in times:
            row += f"  {times['python'] / times['compiled']:>9.1f}x"
        print(row)

    cf = solve(MILLS)
    print(f"\n{'n':>8} {'iter':>10} {'matrix':>10} {'closed':>10}   (Mills a[n])")
    for n in args.terms:
        t_it = best_of(lambda: eval_iterative(MILLS, n), 1)
        t_mx = best_of(lambda: eval_matrix(MILLS, n), args.repeat)
        t_cl = best_of(lambda: eval_closed(cf, n), args.repeat)
        print(f"{n:>8} {t_it:>9.4f}s {t_mx:>9.4f}s {t_cl:>9.4f}s")


if __name__ == "__main__":
    main()
