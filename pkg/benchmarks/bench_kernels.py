"""Time the compiled kernels against the numpy fallback.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]

Both backends get identical inputs and must return identical results; the
script exits non-zero if they disagree.
"""

from __future__ import annotations

import argparse
import sys
import timeit

import numpy as np

from depcat.algebra import ring_category, zmod
from depcat.fincat import finset_skeleton
from depcat.kernels import backend_module


def workloads():
    fs3 = finset_skeleton(3)
    z12 = ring_category(zmod(12))
    comp_fs = np.ascontiguousarray(fs3.comp_table)
    comp_z = np.ascontiguousarray(z12.comp_table)
    o = z12.objects

    # a genuine product 2 x 2, so every one of the 4**8 mediators is visited
    pa = np.array([0, 1, 1, 0], dtype=np.int64)
    pb = np.array([0, 0, 1, 1], dtype=np.int64)
    leg = comp_z.shape[0] - 1

    return {
        "assoc finset(3)": lambda k: k.assoc_defect(comp_fs),
        "assoc Z/12 ring category": lambda k: k.assoc_defect(comp_z),
        "universal Z/12 products": lambda k: [
            k.universal_defect(comp_z, z12.hom_array(d, o[-1]), z12.hom_array(d, o[-1]),
                               z12.hom_array(d, o[-1]), leg, leg, -1, -1)
            for d in o
        ],
        "mono finset(3)": lambda k: [
            k.mono_defect(comp_fs, fs3.hom_array(d, d2), int(f))
            for d in fs3.objects
            for d2 in fs3.objects
            for f in fs3.hom_array(d2, fs3.objects[-1])
        ],
        "finset product 2x2, d=8": lambda k: k.finset_product_defect(2, 2, 8, pa, pb),
    }


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    py = backend_module("python")
    try:
        cy = backend_module("compiled")
    except ImportError:
        print("compiled extension not built; nothing to compare", file=sys.stderr)
        return 1

    mismatch = False
    print(f"{'workload':32} {'python ms':>10} {'compiled ms':>12} {'speedup':>8}")
    for name, run in workloads().items():
        if run(py) != run(cy):
            print(f"{name}: backends disagree", file=sys.stderr)
            mismatch = True
        t_py = min(timeit.repeat(lambda: run(py), number=1, repeat=args.repeat)) * 1e3
        t_cy = min(timeit.repeat(lambda: run(cy), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:32} {t_py:10.2f} {t_cy:12.2f} {t_py / max(t_cy, 1e-9):7.1f}x")
    return 1 if mismatch else 0


if __name__ == "__main__":
    sys.exit(main())
