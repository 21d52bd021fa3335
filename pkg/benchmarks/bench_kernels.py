"""Time the Cython kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit

from sl2quot._kernels import _pyimpl
from sl2quot.rootdata import build_root_system

try:
    from sl2quot._kernels import _ckernels
except ImportError:
    _ckernels = None


def cases():
    e7 = build_root_system("E7")
    cartan = [list(r) for r in e7.cartan]
    hw = [0, 0, 0, 0, 0, 1, 0]
    vals = [2, 3, 4, 6, 5, 4, 2]
    nat = [12, 10, 8, 8, 6, 4, 4, 2, 2, 0, 0, 0]
    keys = list(range(-12, 13, 2))
    counts = [1 + (k % 3) for k in range(len(keys))]
    return {
        "weyl_orbit E7 w6": lambda m: m.weyl_orbit(hw, cartan),
        "orbit_values E7 w6": lambda m: m.orbit_values(hw, cartan, vals),
        "subset_sums k=6": lambda m: m.subset_sums(keys, counts, 6),
        "signed_sums n=12": lambda m: m.signed_sums(nat),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = {"python": _pyimpl}
    if _ckernels is not None:
        backends["cython"] = _ckernels
    print(f"{'kernel':24} " + " ".join(f"{b:>12}" for b in backends) + "   speedup")
    for name, fn in cases().items():
        times = {b: min(timeit.repeat(lambda: fn(m), number=1, repeat=args.repeat)) for b, m in backends.items()}
        speed = times["python"] / times["cython"] if "cython" in times else float("nan")
        print(f"{name:24} " + " ".join(f"{t * 1e3:10.2f}ms" for t in times.values()) + f"   {speed:6.1f}x")


if __name__ == "__main__":
    main()
