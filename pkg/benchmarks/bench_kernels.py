"""Time the compiled and numpy kernel backends on identical inputs.

    python benchmarks/bench_kernels.py [--n 2000] [--dims 10,100,800] [--repeats 3]

Also checks that both backends return bit-identical results.
"""

import argparse
import time

import numpy as np

from imbalance import _core


def best_of(fn, repeats):
    times = []
    out = None
    for _ in range(repeats):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=2000)
    ap.add_argument("--dims", default="10,100,800")
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    backends = sorted(_core.BACKENDS)
    if "cython" not in backends:
        print("compiled backend not built; timing the numpy fallback only")
    rng = np.random.default_rng(args.seed)
    print(f"{'kernel':<26}{'dim':>6}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")
    for dim in (int(d) for d in args.dims.split(",")):
        xa = rng.standard_normal((args.n, dim))
        xb = rng.standard_normal((args.n, dim))
        results = {}
        for name in backends:
            k = _core.BACKENDS[name]
            t_dist, da = best_of(lambda: k.sq_distance_matrix(xa), args.repeats)
            db = k.sq_distance_matrix(xb)
            t_rank, total = best_of(lambda: k.rank_sum(da, db), args.repeats)
            t_stream, (nn, ranks) = best_of(lambda: k.streaming_neighbor_ranks(xa, xb), 1)
            results[name] = {"sq_distance_matrix": (t_dist, da), "rank_sum": (t_rank, total),
                             "streaming_neighbor_ranks": (t_stream, (nn, ranks))}
        for kernel in ("sq_distance_matrix", "rank_sum", "streaming_neighbor_ranks"):
            times = [results[b][kernel][0] for b in backends]
            # backends sort as cython, python; speedup is fallback time over compiled time
            speed = f"{times[-1] / times[0]:9.1f}x" if len(times) == 2 else ""
            print(f"{kernel:<26}{dim:>6}" + "".join(f"{t:11.4f}s" for t in times) + speed)
        if len(backends) == 2:
            a, b = (results[n] for n in backends)
            assert np.array_equal(a["sq_distance_matrix"][1], b["sq_distance_matrix"][1]), "distance mismatch"
            assert a["rank_sum"][1] == b["rank_sum"][1], "rank-sum mismatch"
            for x, y in zip(a["streaming_neighbor_ranks"][1], b["streaming_neighbor_ranks"][1]):
                assert np.array_equal(x, y), "streaming mismatch"
    if len(backends) == 2:
        print("backends agree bit for bit")


if __name__ == "__main__":
    main()
