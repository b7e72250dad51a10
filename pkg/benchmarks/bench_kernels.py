"""Time the numba kernels against their pure-Python sources.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Both variants run on identical inputs and their outputs are compared before
any timing is reported.
"""

import argparse
import time

import numpy as np

from chromsf import _kernels
from chromsf.algebra import partitions_of
from chromsf.csf import _lower_neighbour_table
from chromsf.graphs import bowtie, complete_graph, graph_from_hessenberg, k_ab


def colouring_case(G):
    nbr, deg = _lower_neighbour_table(G)
    mus = [np.array(mu, dtype=np.int64) for mu in partitions_of(G.n)]

    def run(kernel):
        return [kernel(nbr, deg, mu, len(G.edges)) for mu in mus]

    return run


def orientation_case(G):
    edges = G.sorted_edges()
    tails = np.array([i - 1 for i, _ in edges], dtype=np.int64)
    heads = np.array([j - 1 for _, j in edges], dtype=np.int64)

    def run(kernel):
        return [kernel(G.n, tails, heads)]

    return run


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not _kernels.USE_NUMBA:
        raise SystemExit("numba is disabled (CHROMSF_DISABLE_NUMBA) or missing; nothing to compare")

    cases = [
        ("colouring", "bowtie", colouring_case(bowtie()), "colouring_census"),
        ("colouring", "K_{4,5}", colouring_case(k_ab(4, 5)), "colouring_census"),
        ("colouring", "h=3,4,5,6,7,8,8,8", colouring_case(graph_from_hessenberg((3, 4, 5, 6, 7, 8, 8, 8))),
         "colouring_census"),
        ("orientation", "K_5", orientation_case(complete_graph(5)), "orientation_census"),
        ("orientation", "h=3,4,5,6,7,7,7", orientation_case(graph_from_hessenberg((3, 4, 5, 6, 7, 7, 7))),
         "orientation_census"),
    ]
    print(f"{'kernel':<12} {'graph':<20} {'python s':>10} {'numba s':>10} {'speedup':>9}")
    for kind, name, run, attr in cases:
        jitted = getattr(_kernels, attr)
        pure = getattr(_kernels, attr + "_py")
        run(jitted)  # compile outside the timed region
        t_jit, out_jit = best_of(lambda: run(jitted), args.repeat)
        t_py, out_py = best_of(lambda: run(pure), args.repeat)
        assert all(np.array_equal(a, b) for a, b in zip(out_jit, out_py)), f"{kind} kernels disagree on {name}"
        print(f"{kind:<12} {name:<20} {t_py:>10.4f} {t_jit:>10.4f} {t_py / t_jit:>8.1f}x")


if __name__ == "__main__":
    main()
