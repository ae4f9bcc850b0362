"""Compare the compiled and pure-Python modular rank kernels on Hochschild differentials of B.

    python3 benchmarks/bench_rank.py --repeat 3
"""
import argparse
import statistics
import time

from ainf_elliptic import linalg
from ainf_elliptic.homology import hochschild_delta_matrix

CELLS = [(4, -2), (6, -4), (8, -6), (10, -8), (12, -9), (13, -10)]


def timed(fn, repeat):
    out, times = None, []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return out, statistics.median(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=13)
    args = ap.parse_args()

    p = linalg.random_primes(1, seed=0)[0]
    have_compiled = linalg._compiled is not None
    print(f"prime {p}; compiled kernel {'available' if have_compiled else 'NOT built'}")
    print(f"{'cell':>12} {'shape':>13} {'nnz':>7} {'rank':>6} {'python ms':>10} {'compiled ms':>12} {'speedup':>8}")
    for n, m in CELLS:
        if n > args.max_n:
            continue
        A = hochschild_delta_matrix("B", n, m)
        r_py, t_py = timed(lambda: linalg.rank_mod_p(A, p, "python"), args.repeat)
        if have_compiled:
            r_c, t_c = timed(lambda: linalg.rank_mod_p(A, p, "compiled"), args.repeat)
            if r_c != r_py:
                raise SystemExit(f"rank mismatch at {(n, m)}: python {r_py}, compiled {r_c}")
            tail = f"{t_c * 1e3:12.2f} {t_py / max(t_c, 1e-9):8.1f}x"
        else:
            tail = f"{'-':>12} {'-':>8}"
        print(f"{str((n, m)):>12} {f'{A.rows}x{A.cols}':>13} {A.nnz:>7} {r_py:>6} {t_py * 1e3:10.2f} {tail}")


if __name__ == "__main__":
    main()
