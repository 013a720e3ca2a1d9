"""End-to-end curve detection: smooth, band, transform, sweep, select.

The detector smooths rows with a Gaussian (robustness to spiky noise),
splits the image into bands, computes per-band Hough images, runs the
constrained sweep, and then reads off the best complete polyline for
every top-border starting column.  Multiple curves are returned through
greedy suppression of near-duplicate candidates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from . import raster
from .dp import ScoredPolyline, best_start_in_column, dp_sweep, reconstruct
from .fht import hough_stack
from .rmq import BACKENDS

ORIENTATIONS = ("vertical", "horizontal", "both")


@dataclass(frozen=True)
class DetectParams:
    k: int
    gamma_max: float | None = None  # degrees; None = unrestricted bending
    sigma: float = 2.0
    count: int = 1
    min_separation: float | None = None  # defaults to s/2 once s is known
    orientation: str = "vertical"
    rmq_backend: str = "sparse"

    def validate(self) -> None:
        if self.k < 1:
            raise ValueError(f"band count must be >= 1, got {self.k}")
        if self.gamma_max is not None and not 0.0 <= self.gamma_max <= 90.0:
            raise ValueError(f"gamma_max must be in [0, 90] degrees, got {self.gamma_max}")
        if self.sigma < 0:
            raise ValueError(f"sigma must be >= 0, got {self.sigma}")
        if self.count < 1:
            raise ValueError(f"count must be >= 1, got {self.count}")
        if self.min_separation is not None and self.min_separation < 0:
            raise ValueError(f"min_separation must be >= 0, got {self.min_separation}")
        if self.orientation not in ORIENTATIONS:
            raise ValueError(f"orientation must be one of {ORIENTATIONS}")
        if self.rmq_backend not in BACKENDS:
            raise ValueError(f"rmq_backend must be one of {BACKENDS}")


def nms_select(
    candidates: list[ScoredPolyline], count: int, min_separation: float
) -> list[ScoredPolyline]:
    """Greedy pick of the best candidates with vertex-wise separation.

    Candidates must already be ranked.  A candidate is suppressed when any
    of its vertices is closer than min_separation (absolute x difference)
    to a selected polyline's vertex on the same band boundary.
    """
    if min_separation < 0:
        raise ValueError(f"min_separation must be >= 0, got {min_separation}")
    selected: list[ScoredPolyline] = []
    for cand in candidates:
        if len(selected) >= count:
            break
        clash = any(
            abs(cx - sx) < min_separation
            for chosen in selected
            for (cx, _), (sx, _) in zip(cand.vertices, chosen.vertices)
        )
        if not clash:
            selected.append(cand)
    return selected


def _detect_vertical(img: np.ndarray, p: DetectParams) -> tuple[list[ScoredPolyline], int]:
    smoothed = raster.gaussian_rows(img, p.sigma)
    bands = raster.split_into_bands(smoothed, p.k)
    stack = hough_stack(bands)
    result = dp_sweep(stack, p.gamma_max, p.rmq_backend)
    ranked: list[tuple[int, int, int]] = []
    for x0 in range(bands.original_w):
        best = best_start_in_column(result, x0)
        if best is not None:
            ranked.append((best[0], x0, best[1]))
    ranked.sort(key=lambda t: (-t[0], t[1], t[2]))
    candidates = [reconstruct(result, x0, sh) for _, x0, sh in ranked]
    min_sep = p.min_separation if p.min_separation is not None else bands.s / 2
    return nms_select(candidates, p.count, min_sep), bands.s


def detect_curves(img: np.ndarray, p: DetectParams) -> list[ScoredPolyline]:
    """Detect up to p.count extreme polylines in a grayscale image.

    orientation="horizontal" runs the same machinery on the transposed
    image and swaps vertex coordinates back; "both" merges the two ranked
    lists by score (no cross-orientation suppression).  Returns an empty
    list when no complete polyline exists.
    """
    p.validate()
    img = np.asarray(img)
    if img.ndim != 2 or img.size == 0:
        raise ValueError(f"expected a non-empty 2-D image, got shape {img.shape}")

    results: list[ScoredPolyline] = []
    if p.orientation in ("vertical", "both"):
        found, _ = _detect_vertical(img, p)
        results.extend(found)
    if p.orientation in ("horizontal", "both"):
        found, _ = _detect_vertical(raster.transpose(img), p)
        results.extend(_swap_axes(poly) for poly in found)
    results.sort(key=lambda poly: -poly.score)
    return results[: p.count]


def _swap_axes(poly: ScoredPolyline) -> ScoredPolyline:
    return replace(poly, vertices=[(y, x) for x, y in poly.vertices])


def padded_band_height(img: np.ndarray, p: DetectParams) -> int:
    """Band height the detector will use for an image (after padding)."""
    h, w = np.asarray(img).shape
    extent = w if p.orientation == "horizontal" else h
    return 1 << (math.ceil(extent / p.k) - 1).bit_length()
