"""Benchmark the compiled kernels against the pure-Python fallback.

Times the two hot paths -- bipartite sampling and component labeling --
on identical inputs and seeds, and checks the outputs agree bit for bit.

Usage:
    python benchmarks/bench_kernels.py [--n N] [--c C] [--repeats R]
"""

import argparse
import math
import sys
import time

import numpy as np

from rigs._kernels import pure

try:
    from rigs._kernels import _core as compiled
except ImportError:
    compiled = None


def _time(fn, repeats):
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_case(n, m, p, seed, repeats):
    p_arr = np.full(m, p)
    rows = [("pure", pure)]
    if compiled is not None:
        rows.append(("compiled", compiled))
    results = {}
    for name, mod in rows:
        t_sample, (flat, offsets) = _time(
            lambda mod=mod: mod.sample_bipartite(n, p_arr, seed), repeats
        )
        t_comp, sizes = _time(
            lambda mod=mod, f=flat, o=offsets: mod.component_sizes(n, f, o),
            repeats,
        )
        results[name] = (t_sample, t_comp, flat, offsets, np.sort(sizes))
    return results


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=10**6)
    ap.add_argument("--c", type=float, default=2.0)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args(argv)

    if compiled is None:
        print("compiled kernels not available; timing the fallback only")

    print("%-10s %12s %14s %14s" % ("kernel", "n", "sample_s", "components_s"))
    # the pure path is slow; scale its problem sizes down and report both
    for n in (10**4, 10**5, args.n):
        m = n
        p = math.sqrt(args.c / (m * n))
        res = bench_case(n, m, p, args.seed, args.repeats)
        for name, (ts, tc, flat, offsets, sizes) in sorted(res.items()):
            print("%-10s %12d %14.4f %14.4f" % (name, n, ts, tc))
        if compiled is not None:
            pf, _, fe, oe, se = res["pure"]
            cf, _, fc, oc, sc = res["compiled"]
            same = (
                np.array_equal(fe, fc)
                and np.array_equal(oe, oc)
                and np.array_equal(se, sc)
            )
            if not same:
                print("MISMATCH between kernels at n=%d" % n)
                return 1
            ts_ratio = res["pure"][0] / max(res["compiled"][0], 1e-12)
            tc_ratio = res["pure"][1] / max(res["compiled"][1], 1e-12)
            print("%-10s %12s %13.1fx %13.1fx"
                  % ("speedup", "", ts_ratio, tc_ratio))
    return 0


if __name__ == "__main__":
    sys.exit(main())
