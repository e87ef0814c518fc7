#!/usr/bin/env python3
"""Compare the compiled and pure-Python forcing kernels on the search
workloads that dominate runtime (subset sweeps of closures).

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time
from itertools import combinations

from zforce import _kernels_py as kpy
from zforce import family, cartesian_product

try:
    from zforce import _kernels as kc
except ImportError:
    kc = None


def time_once(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def sweep_closures(mod, g, rule, k):
    clo = mod.closure_psd if rule == "psd" else mod.closure_standard
    full = (1 << g.n) - 1
    hits = 0
    for s in combinations(range(g.n), k):
        mask = 0
        for v in s:
            mask |= 1 << v
        if clo(g.adj, g.n, mask) == full:
            hits += 1
    return hits


def search_min(mod, g, rule):
    psd = rule == "psd"
    for k in range(1, g.n + 1):
        found, _ = mod.first_forcing_lex(g.adj, g.n, k, psd)
        if found is not None:
            return k
    return g.n


CASES = [
    ("pinwheel12 standard sweep k=4 (495 closures)",
     lambda mod: sweep_closures(mod, family("pinwheel12"), "standard", 4)),
    ("pinwheel12 psd sweep k=3 (220 closures)",
     lambda mod: sweep_closures(mod, family("pinwheel12"), "psd", 3)),
    ("Z(ML12) full search",
     lambda mod: search_min(mod, family("mobius_ladder", [12]), "standard")),
    ("Z+(C4 x C5) full search, n=20",
     lambda mod: search_min(
         mod, cartesian_product(family("cycle", [4]), family("cycle", [5])),
         "psd")),
]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kc is None:
        print("compiled extension not available; timing pure-python only")
    width = max(len(name) for name, _ in CASES)
    header = f"{'case':<{width}}  {'pure (s)':>10}  {'compiled (s)':>12}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, fn in CASES:
        t_py = min(time_once(lambda: fn(kpy))[1] for _ in range(args.repeat))
        if kc is not None:
            out_c, _ = time_once(lambda: fn(kc))
            out_p = fn(kpy)
            assert out_c == out_p, f"backend mismatch on {name}: {out_c} != {out_p}"
            t_c = min(time_once(lambda: fn(kc))[1] for _ in range(args.repeat))
            print(f"{name:<{width}}  {t_py:>10.4f}  {t_c:>12.4f}  {t_py / t_c:>7.1f}x")
        else:
            print(f"{name:<{width}}  {t_py:>10.4f}  {'-':>12}  {'-':>8}")


if __name__ == "__main__":
    main()
