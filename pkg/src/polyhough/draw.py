"""Integer line rasterization and polyline overlays."""

from __future__ import annotations

import numpy as np


def midpoint_line(x0: int, y0: int, x1: int, y1: int) -> list[tuple[int, int]]:
    """Pixels of the segment from (x0, y0) to (x1, y1), endpoints included.

    Midpoint (Bresenham) stepping along the major axis; mostly-vertical
    segments get exactly one pixel per row.
    """
    dx = abs(x1 - x0)
    dy = abs(y1 - y0)
    sx = 1 if x1 >= x0 else -1
    sy = 1 if y1 >= y0 else -1
    points = []
    if dy >= dx:
        err = dy // 2
        x = x0
        for y in range(y0, y1 + sy, sy):
            points.append((x, y))
            err -= dx
            if err < 0:
                err += dy
                x += sx
    else:
        err = dx // 2
        y = y0
        for x in range(x0, x1 + sx, sx):
            points.append((x, y))
            err -= dy
            if err < 0:
                err += dx
                y += sy
    return points


def draw_polyline(img: np.ndarray, vertices: list[tuple[int, int]], value=255) -> None:
    """Rasterize polyline links into a 2-D image in place, clipped."""
    h, w = img.shape[:2]
    for (xa, ya), (xb, yb) in zip(vertices, vertices[1:]):
        for x, y in midpoint_line(xa, ya, xb, yb):
            if 0 <= x < w and 0 <= y < h:
                img[y, x] = value


def overlay_polylines(
    gray: np.ndarray, polylines, color: tuple[int, int, int] = (255, 0, 0)
) -> np.ndarray:
    """RGB copy of a grayscale image with polylines drawn on top."""
    rgb = np.repeat(gray.astype(np.uint8)[:, :, np.newaxis], 3, axis=2)
    for poly in polylines:
        for channel, level in enumerate(color):
            plane = rgb[:, :, channel]
            draw_polyline(plane, poly.vertices, value=level)
    return rgb
