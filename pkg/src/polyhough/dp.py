"""Bottom-up dynamic programming over a Hough stack.

Starting from the deepest band, each Hough cell accumulates the best
continuation score from the band below, restricted to the shift window
that keeps the bend between consecutive links within gamma_max.  The
winning continuation shift is recorded per cell so polylines can be
reconstructed; cells whose segment leaves the raster are invalid and
invalidity propagates upward, so every reconstructed polyline has its
full complement of links.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fht import HoughStack, hough_stack
from .raster import split_into_bands
from .rmq import NEG_INF, make_table

PRED_NONE = -1


class NoPolylineError(Exception):
    """Raised when no complete polyline exists for the requested start."""


@dataclass(frozen=True)
class ScoredPolyline:
    """A polyline on band boundaries plus its accumulated Hough score."""

    vertices: list[tuple[int, int]]  # k+1 pairs (x, y), y a multiple of s
    score: int
    constrained: bool
    gamma_max: float | None


@dataclass(frozen=True)
class SweepResult:
    """Augmented Hough stack, validity flags and predecessor shifts."""

    augmented: np.ndarray  # (k, 2s+1, W) int64
    valid: np.ndarray  # (k, 2s+1, W) bool
    pred: np.ndarray  # (k-1, 2s+1, W) int32, PRED_NONE where invalid
    k: int
    s: int
    W: int
    gamma_max: float | None


def _round_half_up(value: float) -> int:
    return int(math.floor(value + 0.5))


def angle_window(shift_upper: int, s: int, gamma_max: float) -> tuple[int, int]:
    """Inclusive shift range of continuations bending at most gamma_max.

    The two half-windows (bend left / bend right) share the same-angle
    continuation, so their union is one contiguous interval; the interval
    is clamped to [0, 2s] and always contains shift_upper itself, so an
    in-raster cell never loses its straight continuation to rounding.
    """
    if not 0 <= shift_upper <= 2 * s:
        raise ValueError(f"shift must be in [0, {2 * s}], got {shift_upper}")
    if not 0.0 <= gamma_max <= 90.0:
        raise ValueError(f"gamma_max must be in [0, 90] degrees, got {gamma_max}")
    alpha = math.degrees(math.atan((shift_upper - s) / s))
    lo_angle = math.radians(max(-45.0, alpha - gamma_max))
    hi_angle = math.radians(min(45.0, alpha + gamma_max))
    lo = min(max(_round_half_up(s + s * math.tan(lo_angle)), 0), 2 * s)
    hi = min(max(_round_half_up(s + s * math.tan(hi_angle)), 0), 2 * s)
    return min(lo, shift_upper), max(hi, shift_upper)


def dp_sweep(
    stack: HoughStack, gamma_max: float | None = None, rmq_backend: str = "sparse"
) -> SweepResult:
    """Accumulate extreme-continuation scores from the bottom band up.

    gamma_max=None removes the bending restriction (whole-column maxima).
    After the sweep, augmented[0][shift, x0] holds the score of the best
    complete polyline whose first link is the cell (x0, shift).
    """
    k, s, W = stack.k, stack.s, stack.W
    if k < 1:
        raise ValueError("empty Hough stack")
    n_shifts = 2 * s + 1
    aug = stack.images.astype(np.int64, copy=True)
    valid = np.zeros((k, n_shifts, W), dtype=bool)
    pred = np.full((k - 1, n_shifts, W), PRED_NONE, dtype=np.int32)

    # bottom column of every cell: x_bottom[sh, x0] = x0 + s - sh
    bottom = np.arange(W)[np.newaxis, :] + (s - np.arange(n_shifts))[:, np.newaxis]
    in_raster = (bottom >= 0) & (bottom < W)
    bottom_clipped = np.clip(bottom, 0, W - 1)
    row_sel = np.arange(n_shifts)[:, np.newaxis]

    # deepest band: a cell is valid iff its bottom vertex stays in raster
    valid[k - 1] = in_raster

    if gamma_max is None:
        lo_arr = np.zeros(n_shifts, dtype=np.int64)
        hi_arr = np.full(n_shifts, 2 * s, dtype=np.int64)
    else:
        windows = [angle_window(sh, s, gamma_max) for sh in range(n_shifts)]
        lo_arr = np.array([w[0] for w in windows], dtype=np.int64)
        hi_arr = np.array([w[1] for w in windows], dtype=np.int64)

    neg32 = np.iinfo(np.int32).min // 4
    for i in range(k - 1, 0, -1):
        # narrow to int32 when exact, halving table memory traffic
        if neg32 < aug[i].min() and aug[i].max() < -neg32:
            sentinel = neg32
            masked = np.where(valid[i], aug[i], sentinel).astype(np.int32)
        else:
            sentinel = NEG_INF
            masked = np.where(valid[i], aug[i], sentinel)
        table = make_table(masked, rmq_backend)
        col_vals, col_args = table.query_rows(lo_arr, hi_arr)
        best_vals = col_vals[row_sel, bottom_clipped]
        best_args = col_args[row_sel, bottom_clipped]
        ok = in_raster & (best_vals > sentinel)
        aug[i - 1] += np.where(ok, best_vals, 0)
        valid[i - 1] = ok
        pred[i - 1] = np.where(ok, best_args, PRED_NONE).astype(np.int32)

    return SweepResult(
        augmented=aug, valid=valid, pred=pred, k=k, s=s, W=W, gamma_max=gamma_max
    )


def reconstruct(result: SweepResult, x0: int, shift0: int) -> ScoredPolyline:
    """Walk the predecessor table from a start cell down to the last band."""
    k, s = result.k, result.s
    if not (0 <= x0 < result.W and 0 <= shift0 <= 2 * s):
        raise ValueError(f"start cell ({x0}, {shift0}) outside the Hough image")
    if not result.valid[0, shift0, x0]:
        raise NoPolylineError(f"no complete polyline starts at cell ({x0}, {shift0})")
    vertices = [(x0, 0)]
    x, sh = x0, shift0
    for i in range(k):
        nx = s - sh + x
        vertices.append((nx, (i + 1) * s))
        if i < k - 1:
            nsh = int(result.pred[i, sh, x])
            x, sh = nx, nsh
    return ScoredPolyline(
        vertices=vertices,
        score=int(result.augmented[0, shift0, x0]),
        constrained=result.gamma_max is not None,
        gamma_max=result.gamma_max,
    )


def best_start_in_column(result: SweepResult, x0: int) -> tuple[int, int] | None:
    """Best (score, shift) among valid start cells of one Hough column."""
    column = result.augmented[0, :, x0]
    ok = result.valid[0, :, x0]
    if not ok.any():
        return None
    masked = np.where(ok, column, NEG_INF)
    shift = int(np.argmax(masked))  # np.argmax keeps the smallest index on ties
    return int(masked[shift]), shift


def detect_through_point(
    img: np.ndarray,
    k: int,
    point: tuple[int, int],
    gamma_max: float | None = None,
    rmq_backend: str = "sparse",
    enforce_join: bool = True,
) -> ScoredPolyline:
    """Extreme polyline constrained to pass through a band-boundary point.

    The part below the point is found by the ordinary downward sweep on
    bands j..k-1 restricted to the point's column; the part above by
    vertically flipping bands 0..j-1 and reusing the same machinery.  When
    a bending restriction is active, the join at the point is checked with
    the same shift window (enforce_join toggles this extra check).
    """
    bands = split_into_bands(img, k)
    s, W = bands.s, bands.W
    x_p, y_p = point
    if not 0 <= x_p < bands.original_w:
        raise ValueError(f"point column {x_p} outside [0, {bands.original_w})")
    if y_p % s != 0 or not 0 <= y_p <= k * s:
        raise ValueError(f"point row {y_p} is not a band boundary (multiple of {s})")
    j = y_p // s

    lower = None
    if j < k:
        low_stack = hough_stack(
            BandsView(bands.bands[j:], k - j, s, W, bands.original_w, bands.original_h, 0)
        )
        lower = dp_sweep(low_stack, gamma_max, rmq_backend)
    upper = None
    if j > 0:
        upper = dp_sweep(flipped_upper_stack(bands, j), gamma_max, rmq_backend)

    if upper is None:
        assert lower is not None
        best = best_start_in_column(lower, x_p)
        if best is None:
            raise NoPolylineError(f"no polyline through ({x_p}, {y_p})")
        return reconstruct(lower, x_p, best[1])
    if lower is None:
        best = best_start_in_column(upper, x_p)
        if best is None:
            raise NoPolylineError(f"no polyline through ({x_p}, {y_p})")
        return _unflip(reconstruct(upper, x_p, best[1]), j, s)

    up_scores = np.where(upper.valid[0, :, x_p], upper.augmented[0, :, x_p], NEG_INF)
    low_scores = np.where(lower.valid[0, :, x_p], lower.augmented[0, :, x_p], NEG_INF)
    n_shifts = 2 * s + 1
    best_pair = None
    for sh_low in range(n_shifts):
        if low_scores[sh_low] <= NEG_INF:
            continue
        for sh_up in range(n_shifts):
            if up_scores[sh_up] <= NEG_INF:
                continue
            if enforce_join and gamma_max is not None:
                # sh_up lives in the flipped domain; the original upper
                # link has shift 2s - sh_up
                lo, hi = angle_window(2 * s - sh_up, s, gamma_max)
                if not lo <= sh_low <= hi:
                    continue
            total = int(up_scores[sh_up]) + int(low_scores[sh_low])
            if best_pair is None or total > best_pair[0]:
                best_pair = (total, sh_low, sh_up)
    if best_pair is None:
        raise NoPolylineError(f"no polyline through ({x_p}, {y_p}) satisfies the bend limit")

    total, sh_low, sh_up = best_pair
    upper_poly = _unflip(reconstruct(upper, x_p, sh_up), j, s)
    lower_poly = reconstruct(lower, x_p, sh_low)
    vertices = upper_poly.vertices + [(x, y + j * s) for x, y in lower_poly.vertices[1:]]
    return ScoredPolyline(
        vertices=vertices,
        score=total,
        constrained=gamma_max is not None,
        gamma_max=gamma_max,
    )


def flipped_upper_stack(bands, j: int) -> HoughStack:
    """Hough stack of bands 0..j-1 flipped about the horizontal axis.

    Band order reverses and each band flips row-wise, so the downward
    sweep machinery applies unchanged to the image part above a through
    point.  Note the dyadic patterns of a flipped band are not the flips
    of the original patterns, so upper-part scores live in this flipped
    domain.
    """
    if not 1 <= j <= bands.k:
        raise ValueError(f"upper band count must be in [1, {bands.k}], got {j}")
    flipped = np.stack([bands.bands[m][::-1] for m in range(j - 1, -1, -1)])
    view = BandsView(flipped, j, bands.s, bands.W, bands.original_w, bands.original_h, 0)
    return hough_stack(view)


def _unflip(poly: ScoredPolyline, j: int, s: int) -> ScoredPolyline:
    """Map a polyline found on flipped upper bands back to image rows."""
    vertices = [(x, j * s - y) for x, y in reversed(poly.vertices)]
    return ScoredPolyline(
        vertices=vertices, score=poly.score, constrained=poly.constrained, gamma_max=poly.gamma_max
    )


class BandsView:
    """Minimal BandStack-alike wrapping an existing band array slice."""

    def __init__(self, bands, k, s, W, original_w, original_h, pad_rows):
        self.bands = bands
        self.k = k
        self.s = s
        self.W = W
        self.original_w = original_w
        self.original_h = original_h
        self.pad_rows = pad_rows
