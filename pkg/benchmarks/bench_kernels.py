"""Compare the numba and numpy elimination kernels, and the oracle end to end.

    python benchmarks/bench_kernels.py [--sizes 100 300 600] [--repeat 3]

The oracle timing runs in two subprocesses, one with SOHILBERT_NO_JIT=1, so
each sees its own dispatcher choice.
"""

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from sohilbert import _accel

P = 32003

ORACLE_SNIPPET = """
import time
from sohilbert.oracle import Label, hilbert_function
from sohilbert.symdet import RingSpec
t0 = time.perf_counter()
dims = hilbert_function(RingSpec(2, 5), Label.GRAM_PLUS_MINORS, 4).dims
print(f"{time.perf_counter() - t0:.3f} {dims}")
"""


def best_of(fn, repeat):
    times = []
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def bench_rank(sizes, repeat):
    rng = np.random.default_rng(0)
    # warm the JIT cache outside the timed region
    _accel.rank_mod_p_numba(rng.integers(0, P, size=(4, 4)), P)
    print(f"{'size':>6} {'numba s':>10} {'numpy s':>10} {'speedup':>8}  rank")
    for n in sizes:
        # rank-deficient on purpose: last quarter of rows are combinations
        A = rng.integers(0, P, size=(n, n), dtype=np.int64)
        k = n - n // 4
        A[k:] = (rng.integers(0, 3, size=(n - k, k)) @ A[:k]) % P
        t_jit, r1 = best_of(lambda: _accel.rank_mod_p_numba(A, P), repeat)
        t_np, r2 = best_of(lambda: _accel.rank_mod_p_numpy(A, P), repeat)
        assert r1 == r2 == k, (r1, r2, k)
        print(f"{n:>6} {t_jit:>10.4f} {t_np:>10.4f} {t_np / t_jit:>8.1f}  {r1}")


def bench_oracle():
    print("\noracle (2,5) cover, rescaled degrees 0..4")
    for flag in ("0", "1"):
        env = dict(os.environ, SOHILBERT_NO_JIT=flag)
        out = subprocess.run([sys.executable, "-c", ORACLE_SNIPPET], env=env, capture_output=True, text=True, check=True)
        name = "numpy" if flag == "1" else "numba"
        print(f"  {name:6} {out.stdout.strip()}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[100, 300, 600])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--skip-oracle", action="store_true")
    args = ap.parse_args()
    if _accel._numba_kernels() is None:
        sys.exit("numba is not installed; nothing to compare")
    bench_rank(args.sizes, args.repeat)
    if not args.skip_oracle:
        bench_oracle()


if __name__ == "__main__":
    main()
