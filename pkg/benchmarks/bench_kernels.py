"""Time the numba kernels against the pure-numpy ones on the same inputs.

    python benchmarks/bench_kernels.py [--repeat 3]

Both variants are imported directly, so the SHIFTFROB_DISABLE_NUMBA flag
does not matter here; numba must be installed.
"""
import argparse
import time

import numpy as np

from shiftfrob.kernels import jit, vectorized
from shiftfrob.semigroup import shifted_square_candidates


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def cases():
    n = 10**6
    yield "iota_table(1e6)", lambda k: k.iota_table(n)
    yield "iota_batch(1e6)", lambda k: k.iota_batch(n)
    for a in (500, 2000):
        cands = np.asarray(shifted_square_candidates(a), dtype=np.int64)
        yield f"apery_residues(a={a})", lambda k, c=cands, a=a: k.apery_residues(c, a)
        ap = jit.apery_residues(cands, a)
        yield f"minimal_mask(a={a})", lambda k, c=cands, ap=ap: k.minimal_mask(c, ap)
    gens = np.array([127, 128, 131, 136, 143, 152], dtype=np.int64)
    yield "reachable(limit=2e5)", lambda k: k.reachable(gens, 200_000)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'kernel':<26}{'numba s':>10}{'numpy s':>10}{'ratio':>8}  same")
    for name, call in cases():
        call(jit)  # compile outside the timing
        tj, outj = best_of(lambda: call(jit), args.repeat)
        tv, outv = best_of(lambda: call(vectorized), args.repeat)
        same = np.array_equal(outj, outv)
        print(f"{name:<26}{tj:>10.4f}{tv:>10.4f}{tv / tj:>8.1f}  {same}")


if __name__ == "__main__":
    main()
