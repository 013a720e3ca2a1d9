"""Image plane primitives: band decomposition, row smoothing, reorientation.

Images are 2-D integer numpy arrays of shape (height, width) with
non-negative values.  The smoothing step converts 8-bit input into a
fixed-point plane (scale 256) so that every downstream accumulation stays
in exact integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.ndimage import convolve1d

FIXED_POINT_SCALE = 256


@dataclass(frozen=True)
class BandStack:
    """Equal-height horizontal bands of an image, right-extended with zeros.

    Band height is padded up to a power of two, and each band gains a zero
    margin of one band height on the right, so band i row y holds image row
    i*s + y (zero once past the original height).
    """

    bands: np.ndarray  # (k, s, W) int64
    k: int
    s: int  # band height, power of two
    W: int  # extended band width = original_w + s
    original_w: int
    original_h: int
    pad_rows: int


def _as_image(img: np.ndarray) -> np.ndarray:
    img = np.asarray(img)
    if img.ndim != 2 or img.size == 0:
        raise ValueError(f"expected a non-empty 2-D image, got shape {img.shape}")
    return img


def gaussian_rows(img: np.ndarray, sigma: float) -> np.ndarray:
    """Convolve each row with a normalized 1-D Gaussian, in fixed point.

    The window is 2*ceil(3*sigma)+1 wide, rows are zero-padded at both
    ends, and the result is value*256 rounded to nearest (ties away from
    zero).  sigma=0 degenerates to the identity kernel, i.e. input*256.
    """
    img = _as_image(img)
    if sigma < 0:
        raise ValueError(f"sigma must be >= 0, got {sigma}")
    if sigma == 0:
        return img.astype(np.int64) * FIXED_POINT_SCALE
    radius = math.ceil(3 * sigma)
    offsets = np.arange(-radius, radius + 1, dtype=np.float64)
    kernel = np.exp(-(offsets**2) / (2.0 * sigma * sigma))
    kernel /= kernel.sum()
    smoothed = convolve1d(img.astype(np.float64), kernel, axis=1, mode="constant", cval=0.0)
    # non-negative values, so floor(x + 0.5) rounds half away from zero
    return np.floor(smoothed * FIXED_POINT_SCALE + 0.5).astype(np.int64)


def split_into_bands(img: np.ndarray, k: int) -> BandStack:
    """Cut an image into k equal-height bands, padded and right-extended.

    The band height s is ceil(h/k) rounded up to the next power of two;
    missing rows at the bottom and the right margin [w, w+s) are zero.
    """
    img = _as_image(img)
    h, w = img.shape
    if k <= 0 or k > h:
        raise ValueError(f"band count must be in [1, {h}], got {k}")
    s = 1 << (math.ceil(h / k) - 1).bit_length()
    W = w + s
    pad_rows = k * s - h
    bands = np.zeros((k, s, W), dtype=np.int64)
    for i in range(k):
        top = i * s
        rows = min(s, h - top)
        if rows > 0:
            bands[i, :rows, :w] = img[top : top + rows]
    return BandStack(bands=bands, k=k, s=s, W=W, original_w=w, original_h=h, pad_rows=pad_rows)


def flip_vertical(img: np.ndarray) -> np.ndarray:
    """Mirror an image about its horizontal midline (row y -> h-1-y)."""
    return _as_image(img)[::-1].copy()


def transpose(img: np.ndarray) -> np.ndarray:
    """Swap the two image axes: out[y, x] = in[x, y]."""
    return _as_image(img).T.copy()
