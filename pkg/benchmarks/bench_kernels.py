"""Timing comparison between the pure-Python kernels and the compiled
extension.

Every workload runs on both backends (when the compiled one is
importable), checks that the outputs agree, and reports best-of-N wall
time plus the speedup.  Run from the repository root:

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --heavy --repeat 5
"""

import argparse
import random
import time

from matsplit import _kernels_py
from matsplit import catalog_matroid

try:
    from matsplit import _kernels_cy
except ImportError:
    _kernels_cy = None


def rows_of(name):
    return catalog_matroid(name).matrix.row_masks()


def random_rows(rng, nrows, width):
    return [rng.getrandbits(width) for _ in range(nrows)]


def best_of(fn, repeat):
    t = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        t = min(t, time.perf_counter() - t0)
    return t


def workloads(heavy):
    rng = random.Random(20260814)
    batches = [random_rows(rng, 12, 20) for _ in range(200)]

    def rref(kern):
        out = []
        for rows in batches:
            red, piv = kern.gf2_rref(rows, 20)
            out.append((tuple(red), tuple(piv)))
        return out

    pet = rows_of("PETERSEN")
    k33 = rows_of("K33")
    k46 = rows_of("K46")

    def circuits(kern):
        return tuple(kern.circuit_masks(pet, 15))

    def separation(kern):
        table = kern.subset_rank_table(pet, 15)
        hits = []
        for k in (1, 2, 3):
            hits.append(kern.scan_k_separation(table, 15, len(pet), k))
        return tuple(hits)

    def law_small(kern):
        return kern.split_rank_law(k33, 9)

    def law_large(kern):
        return kern.split_rank_law(k46, 24)

    masks = [rng.getrandbits(24) | 1 for _ in range(400)]
    probes = [rng.getrandbits(24) for _ in range(2000)]

    def scanners(kern):
        a = kern.first_subset_many(probes, masks)
        b = kern.find_xor_pair_many(probes, masks)
        return tuple(a), tuple(b)

    jobs = [
        ("rref 12x20 x200", rref),
        ("circuits PETERSEN", circuits),
        ("rank table + separation PETERSEN", separation),
        ("rank law K33 (2^9 subsets)", law_small),
        ("subset scanners x2000", scanners),
    ]
    if heavy:
        jobs.append(("rank law K46 (2^24 subsets)", law_large))
    return jobs


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3,
                        help="repetitions per workload, best time wins")
    parser.add_argument("--heavy", action="store_true",
                        help="include the 2^24 subset scan")
    args = parser.parse_args(argv)

    if _kernels_cy is None:
        print("compiled extension not importable; timing pure backend only")
    width = 36
    print(f"{'workload':<{width}} {'pure':>10} {'compiled':>10} {'speedup':>9}")
    for name, job in workloads(args.heavy):
        ref = job(_kernels_py)
        t_pure = best_of(lambda: job(_kernels_py), args.repeat)
        if _kernels_cy is None:
            print(f"{name:<{width}} {t_pure:>9.4f}s {'-':>10} {'-':>9}")
            continue
        got = job(_kernels_cy)
        if got != ref:
            raise SystemExit(f"backend mismatch on {name!r}")
        t_comp = best_of(lambda: job(_kernels_cy), args.repeat)
        ratio = t_pure / t_comp if t_comp > 0 else float("inf")
        print(f"{name:<{width}} {t_pure:>9.4f}s {t_comp:>9.4f}s "
              f"{ratio:>8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
