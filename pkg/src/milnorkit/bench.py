"""Backend micro-benchmark.

Times the integer polynomial kernels of the pure-Python backend against
the compiled one (when present) and one end-to-end regulator computation
on the active backend.  Run as `python -m milnorkit.bench`.
"""

from __future__ import annotations

import time

from . import field
from ._gcd import geometry
from ._poly_py import int_lin as py_lin, int_mul as py_mul
from .cycles import GraphCycle, cyc_regulator
from .randgen import rand_unit_series, trial_rng

try:
    from ._poly_cy import int_lin as cy_lin, int_mul as cy_mul
except ImportError:
    cy_lin = cy_mul = None


def _sample_ints(rng, r, count, terms, deg):
    shifts = geometry(r)[0]
    out = []
    for _ in range(count):
        d = {}
        for _ in range(terms):
            key = 0
            for s in shifts:
                key |= rng.randrange(deg + 1) << s
            d[key] = rng.randrange(-9, 10) or 1
        out.append(d)
    return out


def _time(label, fn, calls, repeats=5):
    best = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        for args in calls:
            fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    print(f"  {label:<24} {best * 1e3:8.2f} ms")
    return best


def run() -> None:
    rng = trial_rng(17, "bench", 0)
    polys = _sample_ints(rng, r=3, count=200, terms=12, deg=6)
    guards = geometry(3)[1]
    mul_pairs = [(a, b, guards) for a, b in zip(polys[::2], polys[1::2])]
    lin_pairs = [(a, 3, b, -5) for a, b in mul_pairs]

    print(f"active backend: {field.BACKEND}")
    print("kernel timings (best of 5, 100 operand pairs):")
    _time("int_mul pure", py_mul, mul_pairs)
    if cy_mul is not None:
        _time("int_mul compiled", cy_mul, mul_pairs)
    _time("int_lin pure", py_lin, lin_pairs)
    if cy_lin is not None:
        _time("int_lin compiled", cy_lin, lin_pairs)
    if cy_mul is None:
        print("  (compiled backend not built; pure numbers only)")

    r, m, M, n = 2, 4, 6, 3
    rng2 = trial_rng(17, "bench-reg", 1)
    entries = [rand_unit_series(rng2, r, M) for _ in range(n)]
    cycle = GraphCycle(entries, m)
    t0 = time.perf_counter()
    for i in range(1, m):
        cyc_regulator(cycle, i)
    dt = time.perf_counter() - t0
    print(f"end-to-end: regulators i=1..{m - 1} at r={r} n={n} M={M} "
          f"took {dt * 1e3:.2f} ms on the {field.BACKEND} backend")


if __name__ == "__main__":
    run()
