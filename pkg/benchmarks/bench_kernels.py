#!/usr/bin/env python3
"""Time the numba kernels against the numpy/Python fallbacks.

Each workload runs once to warm up (JIT compilation is excluded), then
``--repeat`` times per backend; the best time is reported along with a check
that both backends returned the same answer.

    python3 benchmarks/bench_kernels.py --repeat 3
"""
import argparse
import time

from copthrottle import _accel, families as fam, pursuit
from copthrottle.graph import domination_number, k_radius
from copthrottle.zero_forcing import forcing_number, throttle


def _game(g, k):
    def run():
        pursuit._solve_cached.cache_clear()
        return pursuit.k_capture_time(g, k)[0]
    return run


WORKLOADS = [
    ("capt_2(P_4 x P_5)", _game(fam.grid(4, 5), 2)),
    ("capt_3(IG(P_2))", _game(fam.projective_incidence(2), 3)),
    ("capt_1(H_10)", _game(fam.max_capture_Hn(10), 1)),
    ("th_+(C_14)", lambda: throttle(fam.cycle(14)).value),
    ("Z(Petersen)", lambda: forcing_number(fam.petersen(), "standard")[0]),
    ("gamma(P_4 x P_6)", lambda: domination_number(fam.grid(4, 6))[0]),
    ("rad_4(random tree n=40)", lambda: k_radius(fam.random_tree(40, 1), 4)),
]


def best_time(fn, repeat):
    best, value = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - t0)
    return best, value


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--only", help="substring filter on workload names")
    args = ap.parse_args()

    if not _accel.NUMBA_AVAILABLE:
        raise SystemExit("numba is not installed; nothing to compare")

    print(f"{'workload':28s} {'numba (s)':>10s} {'numpy (s)':>10s} {'speedup':>8s}  agree")
    for name, fn in WORKLOADS:
        if args.only and args.only not in name:
            continue
        times, values = {}, {}
        for backend in ("numba", "numpy"):
            _accel.set_backend(backend)
            fn()  # warm up
            times[backend], values[backend] = best_time(fn, args.repeat)
        _accel.set_backend("numba")
        speedup = times["numpy"] / times["numba"] if times["numba"] else float("inf")
        agree = values["numba"] == values["numpy"]
        print(f"{name:28s} {times['numba']:10.4f} {times['numpy']:10.4f} {speedup:8.1f}  {agree}")


if __name__ == "__main__":
    main()
