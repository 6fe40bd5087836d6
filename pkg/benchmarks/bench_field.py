"""Compare the compiled and pure-Python field backends.

    python benchmarks/bench_field.py [--repeat N] [--skip-pipeline]

Part one times raw arithmetic on each element class directly.  Part two runs
the full verification in a subprocess per backend, the pure one selected
through SU21_PURE_PYTHON.
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import timeit
from fractions import Fraction

from su21 import _field_py

try:
    from su21 import _field_ext
except ImportError:
    _field_ext = None


def _workload(cls):
    a = cls(Fraction(3, 7), Fraction(-1, 2), 5, Fraction(2, 9))
    b = cls(1, 2, Fraction(-3, 4), 1)

    def run():
        x = a
        for _ in range(200):
            x = (x * b + a) * b.inverse() - a.conjugate()
        return x

    return run


def bench_arithmetic(repeat: int) -> dict[str, float]:
    out = {}
    backends = [("python", _field_py.FieldElement)]
    if _field_ext is not None:
        backends.append(("cython", _field_ext.FieldElement))
    for name, cls in backends:
        out[name] = min(timeit.repeat(_workload(cls), number=5, repeat=repeat)) / 5
    return out


_PIPELINE = (
    "import time, su21; from su21.verifier import verify_all; "
    "t=time.perf_counter(); r=verify_all(); print(su21.BACKEND, time.perf_counter()-t, r.ok)"
)


def bench_pipeline() -> dict[str, float]:
    out = {}
    for env in ({"SU21_PURE_PYTHON": "1"}, {}):
        full = {k: v for k, v in os.environ.items() if k != "SU21_PURE_PYTHON"}
        full.update(env)
        res = subprocess.run([sys.executable, "-c", _PIPELINE], env=full, capture_output=True, text=True, check=True)
        backend, seconds, ok = res.stdout.split()
        if ok != "True":
            raise SystemExit(f"verification failed under the {backend} backend")
        out[backend] = float(seconds)
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--skip-pipeline", action="store_true")
    args = ap.parse_args()

    arith = bench_arithmetic(args.repeat)
    print("arithmetic loop (200 mul/add/inv/conj rounds):")
    for name, t in arith.items():
        print(f"  {name:<8} {t * 1e3:8.2f} ms")
    if "cython" in arith:
        print(f"  speedup  {arith['python'] / arith['cython']:8.2f}x")
    else:
        print("  compiled extension not built; run `python setup.py build_ext --inplace`")

    if not args.skip_pipeline:
        pipe = bench_pipeline()
        print("full verification:")
        for name, t in pipe.items():
            print(f"  {name:<8} {t:8.2f} s")


if __name__ == "__main__":
    main()
