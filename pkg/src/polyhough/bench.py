"""Timing harness for the precompute and sweep phases."""

from __future__ import annotations

import statistics
import time

import numpy as np

from .dp import dp_sweep
from .fht import hough_stack
from .raster import gaussian_rows, split_into_bands

CSV_HEADER = "w,h,k,phase,median_ns"


def _test_image(w: int, h: int, seed: int = 0) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return rng.integers(0, 256, size=(h, w), dtype=np.int64)


def run_benchmark(
    widths,
    heights,
    bands,
    repeats: int = 5,
    sigma: float = 2.0,
    gamma_max: float | None = 10.0,
    rmq_backend: str = "sparse",
) -> list[dict]:
    """Median wall times per (w, h, k) for both pipeline phases.

    Each configuration gets one untimed warmup run before the timed
    repeats.  "precompute" covers smoothing, band split and the per-band
    Hough transforms; "sweep" covers the constrained DP pass.
    """
    if repeats < 1:
        raise ValueError(f"repeats must be >= 1, got {repeats}")
    rows = []
    for w in widths:
        for h in heights:
            for k in bands:
                img = _test_image(w, h)
                pre_ns = []
                sweep_ns = []
                stack = hough_stack(split_into_bands(gaussian_rows(img, sigma), k))
                for _ in range(2):  # warmup
                    dp_sweep(stack, gamma_max, rmq_backend)
                for _ in range(repeats):
                    t0 = time.perf_counter_ns()
                    smoothed = gaussian_rows(img, sigma)
                    band_stack = split_into_bands(smoothed, k)
                    stack = hough_stack(band_stack)
                    t1 = time.perf_counter_ns()
                    dp_sweep(stack, gamma_max, rmq_backend)
                    t2 = time.perf_counter_ns()
                    pre_ns.append(t1 - t0)
                    sweep_ns.append(t2 - t1)
                rows.append(
                    {"w": w, "h": h, "k": k, "phase": "precompute",
                     "median_ns": int(statistics.median(pre_ns))}
                )
                rows.append(
                    {"w": w, "h": h, "k": k, "phase": "sweep",
                     "median_ns": int(statistics.median(sweep_ns))}
                )
    return rows


def rows_to_csv(rows: list[dict]) -> str:
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(f"{r['w']},{r['h']},{r['k']},{r['phase']},{r['median_ns']}")
    return "\n".join(lines) + "\n"
