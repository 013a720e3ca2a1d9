"""Per-band fast Hough transform for mostly-vertical segments.

A band of height s (power of two) and extended width W gets a Hough image
with cells (x_top, shift), shift in [0, 2s] inclusive.  shift = s - dx
where dx = x_bottom - x_top, so shift = s is the vertical segment, shift
below s leans right and shift above s leans left.  Cell values are exact
integer sums of the band over the dyadic pixel pattern standing in for the
ideal segment; pattern pixels outside the band count as zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .raster import BandStack


@dataclass(frozen=True)
class HoughStack:
    """Hough images of a band stack, top-to-bottom band order."""

    images: np.ndarray  # (k, 2s+1, W) int64, indexed [band, shift, x_top]
    k: int
    s: int
    W: int


def _check_power_of_two(n: int) -> None:
    if n < 1 or n & (n - 1):
        raise ValueError(f"height must be a power of two, got {n}")


def dyadic_pattern(x_top: int, t: int, n: int) -> list[tuple[int, int]]:
    """Pixels (column, row) of the dyadic pattern with displacement t.

    One pixel per row, columns non-decreasing.  The recursion splits t as
    floor(t/2) for the top half and ceil(t/2) for the bottom half, the
    bottom half starting floor(t/2) columns to the right.
    """
    _check_power_of_two(n)
    if not 0 <= t <= n:
        raise ValueError(f"displacement must be in [0, {n}], got {t}")
    if n == 1:
        return [(x_top, 0)]
    half = n // 2
    top = dyadic_pattern(x_top, t // 2, half)
    bottom = dyadic_pattern(x_top + t // 2, (t + 1) // 2, half)
    return top + [(c, r + half) for c, r in bottom]


def _displacement_sums(band: np.ndarray) -> np.ndarray:
    """Butterfly accumulation of all right-displacement pattern sums.

    Returns an (s+1, W+s) array R with R[t, x] = sum of the band over
    dyadic_pattern(x, t, s), zeros past the band's right edge.
    """
    s, width = band.shape
    q = width + s
    cur = np.zeros((s, 2, q), dtype=np.int64)
    cur[:, 0, :width] = band
    cur[:, 1, :width] = band
    block = 1
    while block < s:
        block *= 2
        top = cur[0::2]
        bottom = cur[1::2]
        nxt = np.empty((s // block, block + 1, q), dtype=np.int64)
        for t in range(block + 1):
            tf = t // 2
            tc = (t + 1) // 2
            row = top[:, tf, :].copy()
            if tf == 0:
                row += bottom[:, tc, :]
            else:
                row[:, : q - tf] += bottom[:, tc, tf:]
            nxt[:, t, :] = row
        cur = nxt
    return cur[0]


def fht_band(band: np.ndarray) -> np.ndarray:
    """Hough image of one band over the full shift range [0, 2s].

    Right-leaning shifts (<= s) come from the band itself, left-leaning
    ones from the horizontally mirrored band; the two passes agree at
    shift = s (exact column sums).  Bit-exact equal to summing
    dyadic_pattern pixels directly, in O(W*s*log s) additions.
    """
    band = np.asarray(band)
    if band.ndim != 2:
        raise ValueError(f"expected a 2-D band, got shape {band.shape}")
    s, width = band.shape
    _check_power_of_two(s)
    right = _displacement_sums(band)
    mirrored = _displacement_sums(band[:, ::-1])
    hough = np.empty((2 * s + 1, width), dtype=np.int64)
    hough[: s + 1] = right[::-1, :width]  # H[shift] = R[s - shift]
    hough[s + 1 :] = mirrored[1:, :width][:, ::-1]  # H[s + t, x] = M[t, W-1-x]
    return hough


def hough_stack(bands: BandStack) -> HoughStack:
    """Hough images of every band of a stack."""
    images = np.stack([fht_band(bands.bands[i]) for i in range(bands.k)])
    return HoughStack(images=images, k=bands.k, s=bands.s, W=bands.W)


def segment_endpoints(x_top: int, shift: int, s: int) -> tuple[int, int]:
    """Top and bottom columns of the band segment at a Hough cell."""
    if not 0 <= shift <= 2 * s:
        raise ValueError(f"shift must be in [0, {2 * s}], got {shift}")
    return x_top, s - shift + x_top


def shift_to_angle(shift: float, s: int) -> float:
    """Inclination angle in degrees of the segment at a shift index."""
    if not 0 <= shift <= 2 * s:
        raise ValueError(f"shift must be in [0, {2 * s}], got {shift}")
    return math.degrees(math.atan((shift - s) / s))


def angle_to_shift(angle_deg: float, s: int) -> float:
    """Real-valued shift of a segment with the given inclination angle."""
    if not -45.0 <= angle_deg <= 45.0:
        raise ValueError(f"angle must be in [-45, 45] degrees, got {angle_deg}")
    return s + s * math.tan(math.radians(angle_deg))
