"""Compare the numba kernels with the numba-free fallback.

Masks: both backends run in this process on the same graphs and must agree.
Generator: the fallback is selected at import time by PLANECOLOR_DISABLE_NUMBA,
so each path runs in its own interpreter.

    python benchmarks/bench_kernels.py [--outer 6] [--mask-n 12] [--gen-n 10]
"""

import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np

GEN_SNIPPET = """
import json, sys, time
from planecolor.enumerator import class_constraints, enumerate_codes
from planecolor import _kernels
c = class_constraints({outer}, {n})
enumerate_codes(class_constraints({outer}, {outer} + 1))  # compile outside the timer
t = time.perf_counter()
codes = enumerate_codes(c)
print(json.dumps({{"numba": _kernels.USE_NUMBA, "graphs": len(codes), "seconds": time.perf_counter() - t}}))
"""


def bench_masks(outer, nmax):
    from planecolor.coloring import extendable_mask
    from planecolor.enumerator import class_constraints, enumerate

    graphs = list(enumerate(class_constraints(outer, nmax)))
    extendable_mask(graphs[0], "numba")  # compile
    out = {}
    masks = {}
    for backend in ("numba", "numpy"):
        t = time.perf_counter()
        masks[backend] = [extendable_mask(g, backend) for g in graphs]
        out[backend] = time.perf_counter() - t
    same = all(np.array_equal(a, b) for a, b in zip(masks["numba"], masks["numpy"]))
    return len(graphs), out, same


def bench_generator(outer, nmax):
    res = {}
    for flag in ("0", "1"):
        env = dict(os.environ, PLANECOLOR_DISABLE_NUMBA=flag)
        proc = subprocess.run([sys.executable, "-c", GEN_SNIPPET.format(outer=outer, n=nmax)],
                              env=env, capture_output=True, text=True, check=True)
        res["numpy" if flag == "1" else "numba"] = json.loads(proc.stdout.strip().splitlines()[-1])
    return res


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--outer", type=int, default=6)
    ap.add_argument("--mask-n", type=int, default=12)
    ap.add_argument("--gen-n", type=int, default=10)
    args = ap.parse_args()

    count, times, same = bench_masks(args.outer, args.mask_n)
    print(f"extension masks, {count} graphs (outer {args.outer}, n <= {args.mask_n}), agree={same}")
    for k, v in times.items():
        print(f"  {k:6s} {v:8.3f} s")
    print(f"  speedup {times['numpy'] / times['numba']:.1f}x")

    gen = bench_generator(args.outer, args.gen_n)
    print(f"generator (outer {args.outer}, n <= {args.gen_n})")
    for k, v in gen.items():
        print(f"  {k:6s} {v['seconds']:8.3f} s  graphs={v['graphs']}")
    print(f"  speedup {gen['numpy']['seconds'] / gen['numba']['seconds']:.1f}x")
    if gen["numpy"]["graphs"] != gen["numba"]["graphs"] or not same:
        sys.exit("paths disagree")


if __name__ == "__main__":
    main()
