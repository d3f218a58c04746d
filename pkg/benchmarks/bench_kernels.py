"""Compare the numba and numpy kernel backends.

    python benchmarks/bench_kernels.py --groups S4,A5,K4xS3,D8xA4 --repeats 5

Prints the best-of-N time per kernel and group for each backend and the
speedup of numba over numpy.  Numba compile time is excluded by a warm-up
call on every kernel.
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from engelgroups import kernels
from engelgroups._accel import HAVE_NUMBA
from engelgroups.catalog import catalog


def cases(group):
    t, inv = group.table, group.inverses
    e = group.order - 1
    rng = np.random.default_rng(0)
    seed = rng.random(group.order) < 0.1
    return {
        "associativity_violation": (t,),
        "engel_mask(n=3)": (t, inv, e, 3),
        "engel_universal_mask(n=2)": (t, inv, 2),
        "left_absorb_mask": (t, inv, e),
        "right_absorb_mask": (t, inv, e),
        "closure_mask": (t, seed),
        "centralizer_mask": (t, inv, seed),
        "conjugation_witness": (t, inv, np.ones(group.order, dtype=bool),
                                np.ones(group.order, dtype=bool)),
    }


def best_time(fn, args, repeats: int) -> float:
    fn(*args)
    return min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeats))


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--groups", default="S4,A5,K4xS3,D8xA4")
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args(argv)
    if not HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    print(f"{'group':<8} {'kernel':<28} {'numba ms':>10} {'numpy ms':>10} {'speedup':>8}")
    for name in args.groups.split(","):
        g = catalog(name.strip())
        for label, call_args in cases(g).items():
            key = label.split("(")[0]
            fast = best_time(kernels.NUMBA_KERNELS[key], call_args, args.repeats)
            slow = best_time(kernels.NUMPY_KERNELS[key], call_args, args.repeats)
            print(f"{g.name:<8} {label:<28} {fast * 1e3:>10.3f} {slow * 1e3:>10.3f} "
                  f"{slow / fast if fast else float('inf'):>7.1f}x")


if __name__ == "__main__":
    main()
