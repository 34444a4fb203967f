"""Compare the compiled kernels with the pure-Python fallback.

    python3 bench/benchmark.py [--repeat N]

Prints one line per kernel with the median time of each backend and the
speed-up. Inputs are fixed by seed, so runs are comparable.
"""

import argparse
import random
import statistics
import time

import numpy as np

from leadsto import _pykernels
from leadsto.corpus import random_diagram, random_map
from leadsto.tait import torus_diagram

try:
    from leadsto import _ckernels
except ImportError:
    _ckernels = None


def timed(fn, repeat):
    out = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        out.append(time.perf_counter() - t0)
    return statistics.median(out)


def workloads():
    d = torus_diagram(12).relabeled()
    slots = np.array(d.crossings, dtype=np.int32) - 1
    yield "loop_counts (12 crossings, 4096 states)", lambda k: k.loop_counts(slots, 2 * d.n)

    rng = random.Random(5)
    maps = [random_map(14, rng) for _ in range(40)]
    adjs = []
    for g in maps:
        adj = [0] * g.n_vertices
        for a, b in g.edges:
            if a != b:
                adj[a] |= 1 << b
                adj[b] |= 1 << a
        adjs.append((g.n_vertices, adj))

    def cycles(k):
        for n, adj in adjs:
            k.longest_cycle(n, adj, 0)
    yield "longest_cycle (40 maps, 14 edges)", cycles

    rng = random.Random(6)
    sigmas = [g.sigma for g in (random_map(12, rng) for _ in range(200)) if g.is_connected]

    def codes(k):
        for s in sigmas:
            k.min_code(s, True)
    yield f"min_code ({len(sigmas)} maps, 12 edges)", codes

    rng = random.Random(7)
    ds = [random_diagram(9, rng).relabeled() for _ in range(20)]
    arrays = [np.array(x.crossings, dtype=np.int32) - 1 for x in ds]

    def many_loops(k):
        for a in arrays:
            k.loop_counts(a, 18)
    yield "loop_counts (20 random 9-crossing diagrams)", many_loops


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled extension not built; nothing to compare")
        return
    print(f"{'kernel':48s} {'python':>10s} {'cython':>10s} {'speed-up':>9s}")
    for name, work in workloads():
        tp = timed(lambda: work(_pykernels), args.repeat)
        tc = timed(lambda: work(_ckernels), args.repeat)
        print(f"{name:48s} {tp * 1e3:8.2f}ms {tc * 1e3:8.2f}ms {tp / tc:8.1f}x")


if __name__ == "__main__":
    main()
