"""Constrained and reoriented detection.

Shows three variations on the basic detector: forcing the polyline
through a chosen band-boundary point, finding mostly-horizontal curves by
transposition, and asking for several mutually separated curves at once.
"""

import numpy as np

from polyhough import DetectParams, detect_curves, detect_through_point
from polyhough.draw import draw_polyline

# two bright vertical strokes; which one wins depends on the constraint
img = np.zeros((32, 32), dtype=np.int64)
draw_polyline(img, [(8, 0), (8, 31)], value=150)
draw_polyline(img, [(22, 0), (24, 31)], value=200)

free = detect_curves(img, DetectParams(k=4, gamma_max=20.0, sigma=0.5))
print("unconstrained best starts at x =", free[0].vertices[0][0])

# pinning the curve to pass through (8, 16) selects the dimmer stroke
pinned = detect_through_point(img * 256, k=4, point=(8, 16), gamma_max=20.0)
print("through (8,16) vertices:", pinned.vertices)
assert (8, 16) in pinned.vertices

# a mostly-horizontal curve is just a vertical one in the transposed image
wide = np.zeros((24, 40), dtype=np.int64)
draw_polyline(wide, [(0, 10), (39, 14)], value=180)
horizontal = detect_curves(wide, DetectParams(k=4, gamma_max=25.0, sigma=0.5,
                                              orientation="horizontal"))
print("horizontal polyline:", horizontal[0].vertices)

# multiple curves: suppression keeps the two strokes apart
both = detect_curves(img, DetectParams(k=4, gamma_max=20.0, sigma=0.5,
                                       count=2, min_separation=5))
print("two curves, top-border columns:", sorted(p.vertices[0][0] for p in both))
