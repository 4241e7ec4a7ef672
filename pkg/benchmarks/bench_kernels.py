#!/usr/bin/env python3
"""Benchmark the compiled kernel core against the NumPy fallback.

Run from the repository root after an editable install:

    python3 benchmarks/bench_kernels.py          # full sizes
    python3 benchmarks/bench_kernels.py --quick  # smaller sizes

Both backends are exercised on the same inputs and cross-checked before
timing is reported.
"""

import argparse
import time

import numpy as np

from hkdyn.kernels import get_backend


def _time(fn, *args, repeat=3):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true")
    args = ap.parse_args()

    try:
        cy = get_backend("compiled")
    except ImportError:
        raise SystemExit("compiled backend not built; run pip install -e . first")
    py = get_backend("python")

    p_grid = 101 if args.quick else 199
    p_single = 10007 if args.quick else 100003
    n_batch = 50 if args.quick else 200
    n_bits = 1 << 20

    rng = np.random.Generator(np.random.PCG64(0))
    cs = rng.integers(1, p_single, n_batch)
    ds = rng.integers(1, p_single, n_batch)
    bits = (rng.random(n_bits) < 0.5).astype(np.uint8)
    word = np.array([1, 0, 1, 1, 0, 0, 1, 0, 1, 0, 1, 1], dtype=np.uint8)

    cases = [
        (f"kloosterman_block p={p_grid} (full grid)",
         lambda k: k.kloosterman_block(p_grid, 1, p_grid)),
        (f"trace_block p={p_grid} (full grid + cross-check)",
         lambda k: k.trace_block(p_grid, 1, p_grid)),
        (f"kloosterman_batch n={n_batch} p={p_single}",
         lambda k: k.kloosterman_batch(cs, ds, p_single)),
        (f"trace_batch n={n_batch} p={p_single}",
         lambda k: k.trace_batch(cs, ds, p_single)),
        (f"first_match over {n_bits} bits",
         lambda k: k.first_match(bits, word, 1)),
    ]

    print(f"{'case':50s} {'compiled':>10s} {'numpy':>10s} {'speedup':>8s}")
    for name, fn in cases:
        t_cy, out_cy = _time(lambda: fn(cy))
        t_py, out_py = _time(lambda: fn(py))
        a = out_cy[0] if isinstance(out_cy, tuple) else out_cy
        b = out_py[0] if isinstance(out_py, tuple) else out_py
        if isinstance(a, np.ndarray) and a.dtype.kind == "f":
            assert np.allclose(a, b, atol=1e-9), name
        else:
            assert np.array_equal(np.asarray(a), np.asarray(b)), name
        print(f"{name:50s} {t_cy*1e3:9.1f}ms {t_py*1e3:9.1f}ms {t_py/t_cy:7.1f}x")


if __name__ == "__main__":
    main()
