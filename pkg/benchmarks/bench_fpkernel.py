"""Compare the compiled F_p kernel against the numpy fallback.

    python benchmarks/bench_fpkernel.py [--repeat 5]
"""
import argparse
import time

import numpy as np

from lieverify import _fpcore_py
from lieverify.fplin import FpMatrix, SpanState, rank
from lieverify.gradedlie import GeneratorSet, free_lie_dims_oracle

try:
    from lieverify import _fpcore
except ImportError:
    _fpcore = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def cases(p=5, seed=0):
    rng = np.random.default_rng(seed)
    dense = rng.integers(0, p, (300, 400))
    low_rank = (rng.integers(0, p, (400, 60)) @ rng.integers(0, p, (60, 400))) % p
    rows = rng.integers(0, p, (500, 600))
    rows[250:] = (rows[:250] * 2) % p
    gens = GeneratorSet.paper(1, p)
    return {
        "rank 300x400 dense": lambda k: rank(FpMatrix(dense, p), k),
        "rank 400x400 rank 60": lambda k: rank(FpMatrix(low_rank, p), k),
        "span_insert 500 rows": lambda k: _insert_all(rows, p, k),
        "free Lie oracle (1,5) cap 30": lambda k: free_lie_dims_oracle(gens, 30, kernel=k),
    }


def _insert_all(rows, p, kernel):
    s = SpanState(rows.shape[1], p, kernel)
    for r in rows:
        s.insert(r)
    return s.dim


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    kernels = [("numpy", _fpcore_py)]
    if _fpcore is not None:
        kernels.append(("cython", _fpcore))
    else:
        print("compiled kernel not built; timing the fallback only")
    print(f"{'case':32s}" + "".join(f"{name:>12s}" for name, _ in kernels) + "     speedup")
    for label, fn in cases().items():
        results = {name: fn(k) for name, k in kernels}
        if len({str(v) for v in results.values()}) != 1:
            raise SystemExit(f"kernels disagree on {label}: {results}")
        times = [best_of(lambda k=k: fn(k), args.repeat) for _, k in kernels]
        speed = f"{times[0] / times[-1]:9.1f}x" if len(times) > 1 else ""
        print(f"{label:32s}" + "".join(f"{t * 1e3:10.1f}ms" for t in times) + "  " + speed)


if __name__ == "__main__":
    main()
