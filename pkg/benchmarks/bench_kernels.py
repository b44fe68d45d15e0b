"""Time the compiled and pure-Python kernels on workloads the package actually runs.

    python3 benchmarks/bench_kernels.py [--repeat 20]
"""

import argparse
import timeit

import numpy as np

from tavis_grwa import _kernels


def workloads():
    rng = np.random.default_rng(0)
    blocks3 = rng.normal(size=(120, 3, 3))
    blocks3 = blocks3 + blocks3.transpose(0, 2, 1)
    blocks2 = rng.normal(size=(2000, 2, 2))
    blocks2 = blocks2 + blocks2.transpose(0, 2, 1)
    return {
        "laguerre_table(120, 1, 0.49)": lambda k: k.laguerre_table(120, 1, 0.49),
        "laguerre_table(2000, 0, 3.0)": lambda k: k.laguerre_table(2000, 0, 3.0),
        "block_eigh 120 x 3x3 (one spectrum)": lambda k: k.block_eigh(blocks3),
        "block_eigh 2000 x 2x2": lambda k: k.block_eigh(blocks2),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args()
    found = _kernels.backends()
    names = sorted(found)
    print(f"{'workload':40s}" + "".join(f"{n:>14s}" for n in names) + ("    speedup" if len(names) > 1 else ""))
    for label, fn in workloads().items():
        times = {}
        for n in names:
            mod = found[n]
            best = min(timeit.repeat(lambda: fn(mod), number=10, repeat=args.repeat)) / 10
            times[n] = best
        row = f"{label:40s}" + "".join(f"{times[n] * 1e6:12.1f}us" for n in names)
        if "cython" in times:
            row += f"  {times['python'] / times['cython']:8.1f}x"
        print(row)


if __name__ == "__main__":
    main()
