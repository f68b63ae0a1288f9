"""Compare the compiled and pure-Python kernels on the hot workloads.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from apnkit import build_field, kernels
from apnkit import diffspec as ds
from apnkit.numth import hermite_coefficient


def _spectra(spec, count):
    for d in range(1, count + 1):
        ds.delta(spec, d)


def _search(spec):
    ds.apn_search(spec, 2)


def _hermite_dickson(spec):
    for d in range(1, spec.q - 1):
        ds.hermite_dickson_is_permutation(spec, d)


def _symbolic(spec):
    for d in range(1, spec.q - 1):
        for t in (2, 4, 5):
            assert ds.symbolic_power_reduce(spec, d, t) == hermite_coefficient(
                spec.p, spec.n, d, t).c_mod_p


WORKLOADS = [
    ("delta, 200 exponents over GF(5^5)", lambda: _spectra(build_field(5, 5), 200)),
    ("apn_search over GF(3^7)", lambda: _search(build_field(3, 7))),
    ("Hermite-Dickson, all d over GF(5^3)", lambda: _hermite_dickson(build_field(5, 3))),
    ("symbolic vs Lucas, GF(3^5)", lambda: _symbolic(build_field(3, 5))),
    ("delta over GF(3^11), d = 66430", lambda: ds.delta(build_field(3, 11), 66430)),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    for _, fn in WORKLOADS:
        fn()  # builds and caches field tables outside the timed region
    backends = kernels.available_backends()
    print(f"{'workload':42s}" + "".join(f"{b:>12s}" for b in backends) + "     speedup")
    for name, fn in WORKLOADS:
        best = {}
        for b in backends:
            prev = kernels.use_backend(b)
            try:
                times = []
                for _ in range(args.repeat):
                    t0 = time.perf_counter()
                    fn()
                    times.append(time.perf_counter() - t0)
            finally:
                kernels.use_backend(prev)
            best[b] = min(times)
        row = f"{name:42s}" + "".join(f"{best[b]:11.3f}s" for b in backends)
        if "cython" in best:
            row += f"  {best['python'] / best['cython']:9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
