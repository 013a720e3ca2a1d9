"""Shared helpers for the test suite."""

from __future__ import annotations

import numpy as np

from polyhough.fht import HoughStack, fht_band
from polyhough.raster import split_into_bands


def random_image(rng: np.random.Generator, w: int, h: int, high: int = 256) -> np.ndarray:
    return rng.integers(0, high, size=(h, w), dtype=np.int64)


def random_stack(
    rng: np.random.Generator, w: int, h: int, k: int
) -> tuple[HoughStack, np.ndarray]:
    """Hough stack of a random image, no smoothing."""
    img = random_image(rng, w, h)
    bands = split_into_bands(img, k)
    images = np.stack([fht_band(bands.bands[i]) for i in range(k)])
    return HoughStack(images=images, k=k, s=bands.s, W=bands.W), img


def rmq_scan(values, lo: int, hi: int) -> tuple[int, int]:
    """Linear-scan maximum with smallest attaining index, inclusive range."""
    best_v, best_a = None, None
    for i in range(lo, hi + 1):
        v = int(values[i])
        if best_v is None or v > best_v:
            best_v, best_a = v, i
    return best_v, best_a


def polyline_shifts(vertices, s: int) -> list[int]:
    """Per-link shifts of a polyline from its consecutive vertex columns."""
    return [s - (xb - xa) for (xa, _), (xb, _) in zip(vertices, vertices[1:])]


def resum_score(stack: HoughStack, vertices) -> int:
    """Re-sum the raw Hough cells along a polyline's links."""
    s = stack.s
    total = 0
    x = vertices[0][0]
    for i, sh in enumerate(polyline_shifts(vertices, s)):
        total += int(stack.images[i][sh, x])
        x = s - sh + x
    return total
