"""Brute-force reference implementations for verification.

Everything here trades speed for obviousness: Hough cells by direct
pattern summation, best polylines by full enumeration.  The enumeration
scores polylines on the same Hough-cell sums and applies the same
discrete shift windows as the fast path, so agreement is exact rather
than approximate.
"""

from __future__ import annotations

import numpy as np

from .dp import ScoredPolyline, angle_window
from .draw import midpoint_line
from .fht import HoughStack, dyadic_pattern

MAX_EXHAUSTIVE_W = 16
MAX_EXHAUSTIVE_K = 4


def naive_dyadic_hough(band: np.ndarray) -> np.ndarray:
    """Hough image by direct dyadic-pattern summation, no butterfly."""
    band = np.asarray(band, dtype=np.int64)
    s, width = band.shape
    if s < 1 or s & (s - 1):
        raise ValueError(f"height must be a power of two, got {s}")
    padded = np.zeros((s, width + s), dtype=np.int64)
    padded[:, :width] = band
    mirrored = np.zeros_like(padded)
    mirrored[:, :width] = band[:, ::-1]
    hough = np.zeros((2 * s + 1, width), dtype=np.int64)
    for t in range(s + 1):
        offsets = [c for c, _ in dyadic_pattern(0, t, s)]
        right = np.zeros(width, dtype=np.int64)
        left = np.zeros(width, dtype=np.int64)
        for row, off in enumerate(offsets):
            right += padded[row, off : off + width]
            left += mirrored[row, off : off + width]
        hough[s - t] = right
        if t > 0:
            hough[s + t] = left[::-1]
    return hough


def exhaustive_best_polyline(
    stack: HoughStack,
    gamma_max: float | None = None,
    start_column: int | None = None,
    through: tuple[int, int] | None = None,
    enforce_join: bool = True,
    upper_stack: HoughStack | None = None,
) -> ScoredPolyline:
    """Best polyline by enumerating every vertex tuple.

    Applies the identical discrete window feasibility test as the sweep
    and the identical tie-break: smallest top vertex, then
    lexicographically smallest shift sequence.  Refuses instances beyond
    W=16 or k=4.

    For a through point with bands above it, the flip trick both scores
    and windows those links in the flipped domain, so upper_stack (from
    flipped_upper_stack) is required and upper links are scored on it.
    """
    k, s, W = stack.k, stack.s, stack.W
    if W > MAX_EXHAUSTIVE_W or k > MAX_EXHAUSTIVE_K:
        raise ValueError(
            f"instance too large for exhaustive search (W={W} > {MAX_EXHAUSTIVE_W} "
            f"or k={k} > {MAX_EXHAUSTIVE_K})"
        )
    if through is not None:
        x_p, j = through
        if not (0 <= x_p < W and 0 <= j <= k):
            raise ValueError(f"through point {through} outside the stack")
        if j > 0 and upper_stack is None:
            raise ValueError("upper_stack is required for a through point below band 0")
    n_shifts = 2 * s + 1
    windows = None
    if gamma_max is not None:
        windows = [angle_window(sh, s, gamma_max) for sh in range(n_shifts)]

    def pair_ok(i: int, prev_sh: int, sh: int) -> bool:
        # feasibility of consecutive links (i-1, i)
        if windows is None:
            return True
        if through is not None and i <= through[1] - 1:
            # both links above the through point: the sweep tests them in
            # the flipped domain
            lo, hi = windows[2 * s - sh]
            return lo <= 2 * s - prev_sh <= hi
        if through is not None and i == through[1] and not enforce_join:
            return True
        lo, hi = windows[prev_sh]
        return lo <= sh <= hi

    best: tuple[int, int, tuple[int, ...]] | None = None

    def descend(x0: int, i: int, x: int, prev_sh: int | None, score: int, shifts: list[int]) -> None:
        nonlocal best
        if through is not None and i == through[1] and x != through[0]:
            return
        if i == k:
            if best is None or score > best[0]:
                best = (score, x0, tuple(shifts))
            return
        for sh in range(n_shifts):
            nx = s - sh + x
            if not 0 <= nx < W:
                continue
            if prev_sh is not None and not pair_ok(i, prev_sh, sh):
                continue
            if through is not None and i < through[1]:
                # link above the through point: flipped-domain cell
                link = int(upper_stack.images[through[1] - 1 - i][2 * s - sh, nx])
            else:
                link = int(stack.images[i][sh, x])
            shifts.append(sh)
            descend(x0, i + 1, nx, sh, score + link, shifts)
            shifts.pop()

    columns = range(W) if start_column is None else [start_column]
    for x_start in columns:
        descend(x_start, 0, x_start, None, 0, [])

    if best is None:
        raise ValueError("no feasible polyline in the instance")
    score, x0, shifts = best
    vertices = [(x0, 0)]
    x = x0
    for i, sh in enumerate(shifts):
        x = s - sh + x
        vertices.append((x, (i + 1) * s))
    return ScoredPolyline(
        vertices=vertices,
        score=score,
        constrained=gamma_max is not None,
        gamma_max=gamma_max,
    )


def ideal_line_sum(img: np.ndarray, x_top: int, x_bottom: int, y_top: int, y_bottom: int) -> int:
    """Pixel sum along the midpoint-rasterized mostly-vertical segment."""
    if abs(x_bottom - x_top) > abs(y_bottom - y_top):
        raise ValueError("segment is not mostly vertical")
    img = np.asarray(img)
    h, w = img.shape
    total = 0
    for x, y in midpoint_line(x_top, y_top, x_bottom, y_bottom):
        if 0 <= x < w and 0 <= y < h:
            total += int(img[y, x])
    return total
