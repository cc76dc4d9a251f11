"""Time the compiled and pure-Python kernel backends on representative inputs.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import timeit

from alperin8 import kernels
from alperin8.smallgroups import character_table, local_group
from alperin8.symbols import partitions


def _workloads(rng: random.Random) -> dict:
    parts = [list(p.parts) for n in range(1, 16) for p in partitions(n)]
    betas = [sorted(rng.sample(range(40), 12), reverse=True) for _ in range(300)]
    n, nk, nc = 20000, 8, 16
    class_of = [rng.randrange(nc) for _ in range(n)]
    cols = [[rng.randrange(nc) for _ in range(n)] for _ in range(nk)]
    return {
        "hook_lengths": lambda: [kernels.hook_lengths(p) for p in parts],
        "beta_hooks": lambda: [kernels.beta_hooks(b) for b in betas],
        "cross_hooks": lambda: [kernels.cross_hooks(a, b) for a, b in zip(betas, betas[1:])],
        "structure_constants": lambda: kernels.structure_constants(class_of, cols, nc),
        "character_table(E21)": lambda: character_table(local_group(21)),
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = ["python"] + (["cython"] if kernels.compiled is not None else [])
    work = _workloads(random.Random(0))
    start = kernels.BACKEND
    print(f"{'kernel':<24}" + "".join(f"{b:>12}" for b in backends) + ("     speedup" if len(backends) == 2 else ""))
    try:
        for name, fn in work.items():
            times = []
            for b in backends:
                kernels.set_backend(b)
                times.append(min(timeit.repeat(fn, number=1, repeat=args.repeat)))
            row = f"{name:<24}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times)
            if len(times) == 2:
                row += f"{times[0] / times[1]:>11.1f}x"
            print(row)
    finally:
        kernels.set_backend(start)


if __name__ == "__main__":
    main()
