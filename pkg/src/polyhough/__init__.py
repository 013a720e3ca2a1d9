"""Detection of end-to-end curves of limited curvature.

Curves are approximated by k-link mostly-vertical polylines whose link
endpoints lie on horizontal band boundaries.  Per-band fast Hough
transforms turn every candidate link into a table cell, a bottom-up
dynamic-programming sweep with range-maximum queries accumulates the
best bend-limited continuation for every cell, and the extreme polyline
is read off the top band.
"""

from .dp import (
    NoPolylineError,
    ScoredPolyline,
    SweepResult,
    angle_window,
    best_start_in_column,
    detect_through_point,
    dp_sweep,
    reconstruct,
)
from .fht import (
    HoughStack,
    angle_to_shift,
    dyadic_pattern,
    fht_band,
    hough_stack,
    segment_endpoints,
    shift_to_angle,
)
from .oracle import exhaustive_best_polyline, ideal_line_sum, naive_dyadic_hough
from .pipeline import DetectParams, detect_curves, nms_select
from .raster import (
    FIXED_POINT_SCALE,
    BandStack,
    flip_vertical,
    gaussian_rows,
    split_into_bands,
    transpose,
)
from .rmq import RmqIndex, SegmentTree, SparseTable, rmq_build, rmq_query
from .synth import SynthTruth, generate_instance

__version__ = "0.1.0"

__all__ = [
    "BandStack",
    "DetectParams",
    "FIXED_POINT_SCALE",
    "HoughStack",
    "NoPolylineError",
    "RmqIndex",
    "ScoredPolyline",
    "SegmentTree",
    "SparseTable",
    "SweepResult",
    "SynthTruth",
    "angle_to_shift",
    "angle_window",
    "best_start_in_column",
    "detect_curves",
    "detect_through_point",
    "dp_sweep",
    "dyadic_pattern",
    "exhaustive_best_polyline",
    "fht_band",
    "flip_vertical",
    "gaussian_rows",
    "generate_instance",
    "hough_stack",
    "ideal_line_sum",
    "naive_dyadic_hough",
    "nms_select",
    "reconstruct",
    "rmq_build",
    "rmq_query",
    "segment_endpoints",
    "shift_to_angle",
    "split_into_bands",
    "transpose",
]
