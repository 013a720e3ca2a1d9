"""Synthetic test instances with known ground truth.

Generates a random bend-limited polyline, rasterizes it at full stroke
value on a black background and optionally sprays salt noise, which is
the noise model the detector is meant to survive.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .dp import angle_window
from .draw import draw_polyline

_MAX_TRIES = 1000


@dataclass(frozen=True)
class SynthTruth:
    vertices: list[tuple[int, int]]
    gamma_max: float
    noise_salt: float
    seed: int
    width: int
    height: int
    k: int
    band_height: int

    def to_dict(self) -> dict:
        d = asdict(self)
        d["vertices"] = [list(v) for v in self.vertices]
        return d


def generate_instance(
    width: int,
    height: int,
    k: int,
    gamma_max: float,
    noise_salt: float = 0.0,
    seed: int = 0,
) -> tuple[np.ndarray, SynthTruth]:
    """Random bend-limited polyline image plus its ground truth.

    The first vertex is uniform over the top border; each following shift
    is uniform over its bend window intersected with the shifts that keep
    the next vertex inside [0, width).  Every pixel is then flipped to 255
    with probability noise_salt.
    """
    if width < 2 or height < 1 or not 1 <= k <= height:
        raise ValueError(f"bad geometry width={width} height={height} k={k}")
    if not 0.0 <= gamma_max <= 90.0:
        raise ValueError(f"gamma_max must be in [0, 90] degrees, got {gamma_max}")
    if not 0.0 <= noise_salt <= 1.0:
        raise ValueError(f"noise_salt must be a probability, got {noise_salt}")
    s = 1 << (math.ceil(height / k) - 1).bit_length()
    rng = np.random.default_rng(seed)

    vertices = None
    for _ in range(_MAX_TRIES):
        x = int(rng.integers(0, width))
        verts = [(x, 0)]
        sh_prev = None
        ok = True
        for i in range(k):
            lo, hi = (0, 2 * s) if sh_prev is None else angle_window(sh_prev, s, gamma_max)
            # keep the next vertex on the visible raster
            lo = max(lo, x + s - (width - 1))
            hi = min(hi, x + s)
            if lo > hi:
                ok = False
                break
            sh = int(rng.integers(lo, hi + 1))
            x = s - sh + x
            verts.append((x, (i + 1) * s))
            sh_prev = sh
        if ok:
            vertices = verts
            break
    if vertices is None:
        raise ValueError("could not sample a feasible polyline for this geometry")

    img = np.zeros((height, width), dtype=np.uint8)
    draw_polyline(img, vertices, value=255)
    if noise_salt > 0:
        img[rng.random((height, width)) < noise_salt] = 255
    truth = SynthTruth(
        vertices=vertices,
        gamma_max=gamma_max,
        noise_salt=noise_salt,
        seed=seed,
        width=width,
        height=height,
        k=k,
        band_height=s,
    )
    return img, truth
