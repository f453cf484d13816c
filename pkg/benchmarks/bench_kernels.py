"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--sizes 10 20 40] [--repeat 3]
"""

import argparse
import time

from ecc_spectra import _backend
from ecc_spectra.generators import GeneratorSpec, random_ct_clique_tree
from ecc_spectra.graph import all_pairs_distances, eccentricity_profile
from ecc_spectra.matrix import eccentricity_matrix
from ecc_spectra.exact import char_poly
from ecc_spectra.spectra import symmetric_eigenvalues


def graph_of_order(target, seed=0):
    """First seeded random member of CT with at least ``target`` vertices."""
    while True:
        g = random_ct_clique_tree(GeneratorSpec(seed, n_blocks=(target // 2, target), block_size=(2, 3)))
        if g.n >= target:
            return g
        seed += 1


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[10, 20, 40, 80])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if not _backend.COMPILED_AVAILABLE:
        print("compiled extension not built; only the python backend is timed")
    backends = ["python"] + (["compiled"] if _backend.COMPILED_AVAILABLE else [])

    print(f"{'kernel':<10} {'n':>5} " + " ".join(f"{b:>12}" for b in backends) + "   speedup")
    for size in args.sizes:
        g = graph_of_order(size)
        d = all_pairs_distances(g)
        eps = eccentricity_matrix(d, eccentricity_profile(d))
        kernels = {
            "bfs": lambda: all_pairs_distances(g),
            "jacobi": lambda: symmetric_eigenvalues(eps),
            "charpoly": lambda: char_poly(eps),
        }
        for kname, fn in kernels.items():
            row = {}
            for b in backends:
                _backend.use(b)
                row[b] = best_of(fn, args.repeat)
            speed = f"{row['python'] / row['compiled']:8.1f}x" if "compiled" in row else ""
            print(f"{kname:<10} {g.n:>5} " + " ".join(f"{row[b] * 1e3:10.2f}ms" for b in backends) + f"  {speed}")
    _backend.use(backends[-1])


if __name__ == "__main__":
    main()
