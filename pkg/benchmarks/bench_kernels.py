"""Compare the numba and numpy backends of the integer kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each kernel is run once per backend to warm up (numba compiles on first
call), then timed; results are checked to agree before timing is reported.
"""
import argparse
import itertools
import time

import numpy as np

from supernormal import _kernels
from supernormal.chambers import LatticePolygon
from supernormal.arrangement import maximal_segments


def _cases():
    rng = np.random.default_rng(0)
    G = rng.integers(-4, 5, size=(6, 3)).tolist()
    c = rng.integers(5, 30, size=6).tolist()
    yield "box_points 3d", lambda b: _kernels.box_points([-12] * 3, [12] * 3, G, c, backend=b), \
        lambda r: sorted(map(tuple, r.tolist()))

    gens = rng.integers(-5, 6, size=(14, 4)).tolist()
    combos = list(itertools.combinations(range(14), 3))
    Gm = np.array(gens, dtype=object)
    E = np.zeros((0, 4), dtype=object)
    yield "candidate_normals 4d", lambda b: _kernels.candidate_normals(Gm, E, combos, backend=b), \
        lambda r: [tuple(abs(x) for x in row) for row in r.tolist()]

    pts = LatticePolygon.rectangle(4, 4).latticePoints
    segs, _ = maximal_segments(pts)
    S = np.array(segs, dtype=object)
    yield "segment_intersections 4x4", lambda b: _kernels.segment_intersections(S, backend=b), \
        lambda r: sorted(map(tuple, r.tolist()))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = ["numpy"] + (["numba"] if _kernels.HAVE_NUMBA else [])
    print(f"{'kernel':28s}" + "".join(f"{b:>12s}" for b in backends))
    for name, run, canon in _cases():
        times, results = [], []
        for b in backends:
            results.append(canon(run(b)))  # warm-up
            t = time.perf_counter()
            for _ in range(args.repeat):
                run(b)
            times.append((time.perf_counter() - t) / args.repeat)
        assert all(r == results[0] for r in results), f"{name}: backends disagree"
        print(f"{name:28s}" + "".join(f"{t * 1e3:10.1f}ms" for t in times))


if __name__ == "__main__":
    main()
