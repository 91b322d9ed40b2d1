"""Compare the numba kernels against the numpy / pure-Python fallbacks.

    python3 benchmarks/bench_kernels.py [--repeat 3]

The fallback is what runs when SECONDNBR_PURE_NUMPY=1 is set; here both
paths are called directly through the ``backend`` argument.
"""

import argparse
import time

from secondnbr import _kernels
from secondnbr.gnp import SamplerConfig, sample_gnp
from secondnbr.graph import Graph
from secondnbr.search import SearchConfig, enumerate_orientations


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba disabled (SECONDNBR_PURE_NUMPY set?); nothing to compare")

    rows = []
    for name, G, pred in [("K6 sullivan, 2^15 codes", Graph.complete(6), True),
                          ("K7 seymour, 2^21 codes", Graph.complete(7), False)]:
        edges = G.edges()
        # warm-up compiles (or loads the cache) outside the timing
        _kernels.count_orientations_without(G.n, edges, pred, 0, 2, "numba")
        tn, rn = best_of(args.repeat, lambda: _kernels.count_orientations_without(G.n, edges, pred, backend="numba"))
        tp, rp = best_of(args.repeat, lambda: _kernels.count_orientations_without(G.n, edges, pred, backend="numpy"))
        assert rn == rp
        rows.append((name, "numba", "numpy", tn, tp))

    G14 = sample_gnp(SamplerConfig(14, 0.3, 1))
    for label, G, prune in [("unpruned DFS K6, 2^15 leaves", Graph.complete(6), False),
                            (f"pruned DFS G(14,0.3), m={G14.m}", G14, True)]:
        cfg = lambda b: SearchConfig(threads=1, backend=b, prune=prune, force=True)
        run = lambda b: enumerate_orientations(G, "seymour", cfg(b))
        run("numba")
        tn, rn = best_of(args.repeat, lambda: run("numba"))
        tp, rp = best_of(args.repeat, lambda: run("python"))
        assert (rn.verdict, rn.nodes) == (rp.verdict, rp.nodes)
        rows.append((label, "numba", "python", tn, tp))

    width = max(len(r[0]) for r in rows)
    print(f"{'case':<{width}}  {'fast':>10}  {'fallback':>10}  speedup")
    for name, _, fb, tn, tp in rows:
        print(f"{name:<{width}}  {tn:>9.4f}s  {tp:>9.4f}s  {tp / tn:6.1f}x ({fb})")


if __name__ == "__main__":
    main()
