"""Command-line surface: detect, synth, verify, bench.

Exit codes: 0 success, 1 usage or I/O error, 2 empty detection result,
3 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np
from scipy.ndimage import grey_dilation, grey_erosion

from . import bench as bench_mod
from . import netpbm
from .dp import NoPolylineError, best_start_in_column, detect_through_point, dp_sweep
from .draw import overlay_polylines
from .fht import fht_band, hough_stack
from .oracle import (
    MAX_EXHAUSTIVE_K,
    MAX_EXHAUSTIVE_W,
    exhaustive_best_polyline,
    naive_dyadic_hough,
)
from .pipeline import DetectParams, detect_curves, padded_band_height
from .raster import gaussian_rows, split_into_bands
from .synth import generate_instance

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_EMPTY = 2
EXIT_MISMATCH = 3


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # map argparse usage errors onto exit code 1
        raise CliError(message)


def _int_list(text: str) -> list[int]:
    return [int(part) for part in text.split(",") if part]


def _build_parser() -> _Parser:
    parser = _Parser(prog="polyhough", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    det = sub.add_parser("detect", help="detect extreme polylines in a PGM image")
    det.add_argument("--input", required=True, help="binary PGM (P5) input image")
    det.add_argument("--bands", type=int, required=True, help="number of horizontal bands")
    det.add_argument("--gamma-max", type=float, default=None,
                     help="max bending angle in degrees (omit for unrestricted)")
    det.add_argument("--count", type=int, default=1, help="number of polylines to return")
    det.add_argument("--sigma", type=float, default=2.0, help="row Gaussian sigma in pixels")
    det.add_argument("--min-separation", type=float, default=None,
                     help="suppression distance in pixels (default: half a band height)")
    det.add_argument("--orientation", choices=("vertical", "horizontal", "both"),
                     default="vertical")
    det.add_argument("--rmq", choices=("sparse", "segtree"), default="sparse")
    det.add_argument("--through-point", default=None, metavar="X,Y",
                     help="force the polyline through a band-boundary point")
    det.add_argument("--gradient", action="store_true",
                     help="apply a 3x3 morphological gradient before detection")
    det.add_argument("--threads", type=int, default=1, help="parallelism cap (output-neutral)")
    det.add_argument("--json", dest="json_out", default=None, help="result JSON path")
    det.add_argument("--overlay", default=None, help="PPM overlay output path")

    syn = sub.add_parser("synth", help="generate a synthetic instance with ground truth")
    syn.add_argument("--width", type=int, required=True)
    syn.add_argument("--height", type=int, required=True)
    syn.add_argument("--bands", type=int, required=True)
    syn.add_argument("--gamma-max", type=float, default=20.0)
    syn.add_argument("--noise-salt", type=float, default=0.0)
    syn.add_argument("--seed", type=int, required=True)
    syn.add_argument("--output", required=True, help="PGM image output path")
    syn.add_argument("--truth", default=None, help="ground-truth JSON output path")

    ver = sub.add_parser("verify", help="cross-check fast paths against brute force")
    ver.add_argument("--width", type=int, default=10)
    ver.add_argument("--height", type=int, default=8)
    ver.add_argument("--bands", type=int, default=2)
    ver.add_argument("--gamma-max", type=float, default=30.0)
    ver.add_argument("--seed", type=int, default=0)

    ben = sub.add_parser("bench", help="time the precompute and sweep phases")
    ben.add_argument("--widths", type=_int_list, default=[256])
    ben.add_argument("--heights", type=_int_list, default=[256, 512, 1024])
    ben.add_argument("--bands", type=_int_list, default=[8])
    ben.add_argument("--repeats", type=int, default=5)
    ben.add_argument("--rmq", choices=("sparse", "segtree"), default="sparse")
    ben.add_argument("--output", default=None, help="CSV output path (default: stdout)")

    return parser


def _result_json(params: DetectParams, w: int, h: int, s: int, polylines) -> str:
    doc = {
        "params": {
            "k": params.k,
            "gamma_max": params.gamma_max,
            "sigma": params.sigma,
            "count": params.count,
            "min_separation": params.min_separation,
            "orientation": params.orientation,
            "rmq_backend": params.rmq_backend,
        },
        "original_size": [w, h],
        "padded_band_height": s,
        "polylines": [
            {"score": poly.score, "vertices": [list(v) for v in poly.vertices]}
            for poly in polylines
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def _cmd_detect(args) -> int:
    params = DetectParams(
        k=args.bands,
        gamma_max=args.gamma_max,
        sigma=args.sigma,
        count=args.count,
        min_separation=args.min_separation,
        orientation=args.orientation,
        rmq_backend=args.rmq,
    )
    params.validate()
    if args.threads < 1:
        raise CliError(f"--threads must be >= 1, got {args.threads}")
    img = netpbm.read_pgm(args.input).astype(np.int64)
    if args.gradient:
        img = grey_dilation(img, size=(3, 3)) - grey_erosion(img, size=(3, 3))

    if args.through_point is not None:
        try:
            x_str, y_str = args.through_point.split(",")
            point = (int(x_str), int(y_str))
        except ValueError as exc:
            raise CliError(f"bad --through-point {args.through_point!r}: expected X,Y") from exc
        smoothed = gaussian_rows(img, params.sigma)
        try:
            polylines = [
                detect_through_point(
                    smoothed, params.k, point, params.gamma_max, params.rmq_backend
                )
            ]
        except NoPolylineError:
            polylines = []
    else:
        polylines = detect_curves(img, params)

    h, w = img.shape
    s = padded_band_height(img, params)
    text = _result_json(params, w, h, s, polylines)
    if args.json_out:
        Path(args.json_out).write_text(text)
    else:
        sys.stdout.write(text)
    if args.overlay:
        netpbm.write_ppm(args.overlay, overlay_polylines(np.clip(img, 0, 255), polylines))
    return EXIT_OK if polylines else EXIT_EMPTY


def _cmd_synth(args) -> int:
    img, truth = generate_instance(
        args.width, args.height, args.bands, args.gamma_max, args.noise_salt, args.seed
    )
    netpbm.write_pgm(args.output, img)
    if args.truth:
        Path(args.truth).write_text(json.dumps(truth.to_dict(), indent=2) + "\n")
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.bands < 1 or args.height < args.bands or args.width < 2:
        raise CliError("bad verify geometry")
    rng = np.random.default_rng(args.seed)
    img = rng.integers(0, 256, size=(args.height, args.width), dtype=np.int64)
    bands = split_into_bands(img, args.bands)
    if bands.W > MAX_EXHAUSTIVE_W or bands.k > MAX_EXHAUSTIVE_K:
        raise CliError(
            f"instance too large for brute-force verification "
            f"(W={bands.W} max {MAX_EXHAUSTIVE_W}, k={bands.k} max {MAX_EXHAUSTIVE_K})"
        )

    for i in range(bands.k):
        fast = fht_band(bands.bands[i])
        slow = naive_dyadic_hough(bands.bands[i])
        if not np.array_equal(fast, slow):
            sh, x = np.argwhere(fast != slow)[0]
            print(f"MISMATCH fht band={i} shift={sh} x={x} fast={fast[sh, x]} "
                  f"naive={slow[sh, x]}")
            return EXIT_MISMATCH

    stack = hough_stack(bands)
    result = dp_sweep(stack, args.gamma_max)
    best = None
    for x0 in range(bands.W):
        col = best_start_in_column(result, x0)
        if col is not None and (best is None or col[0] > best[0]):
            best = (col[0], x0, col[1])
    oracle_best = exhaustive_best_polyline(stack, args.gamma_max)
    if best is None or best[0] != oracle_best.score:
        got = None if best is None else best[0]
        print(f"MISMATCH dp best score {got} != exhaustive {oracle_best.score}")
        return EXIT_MISMATCH

    print("verify OK: fht == naive on every cell, dp best == exhaustive best")
    return EXIT_OK


def _cmd_bench(args) -> int:
    if args.repeats < 1:
        raise CliError(f"--repeats must be >= 1, got {args.repeats}")
    rows = bench_mod.run_benchmark(
        args.widths, args.heights, args.bands, repeats=args.repeats, rmq_backend=args.rmq
    )
    text = bench_mod.rows_to_csv(rows)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        handler = {
            "detect": _cmd_detect,
            "synth": _cmd_synth,
            "verify": _cmd_verify,
            "bench": _cmd_bench,
        }[args.command]
        return handler(args)
    except (CliError, ValueError, OSError) as exc:
        print(f"polyhough: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
