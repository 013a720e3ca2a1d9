"""Binary netpbm readers and writers (P5 grayscale, P6 color)."""

from __future__ import annotations

from pathlib import Path

import numpy as np


def _read_header(data: bytes, magic: bytes) -> tuple[list[int], int]:
    if not data.startswith(magic):
        raise ValueError(f"not a {magic.decode()} file")
    fields: list[int] = []
    pos = 2
    while len(fields) < 3:
        if pos >= len(data):
            raise ValueError("truncated netpbm header")
        ch = data[pos : pos + 1]
        if ch == b"#":
            pos = data.index(b"\n", pos) + 1
        elif ch.isspace():
            pos += 1
        else:
            end = pos
            while end < len(data) and not data[end : end + 1].isspace():
                end += 1
            fields.append(int(data[pos:end]))
            pos = end
    return fields, pos + 1  # single whitespace byte after maxval


def read_pgm(path) -> np.ndarray:
    """Read a binary PGM (P5, maxval <= 255) into a (h, w) uint8 array."""
    data = Path(path).read_bytes()
    (w, h, maxval), start = _read_header(data, b"P5")
    if not 0 < maxval <= 255:
        raise ValueError(f"unsupported maxval {maxval}")
    pixels = np.frombuffer(data, dtype=np.uint8, count=w * h, offset=start)
    if pixels.size != w * h:
        raise ValueError("truncated PGM pixel data")
    return pixels.reshape(h, w).copy()


def write_pgm(path, img: np.ndarray) -> None:
    """Write a (h, w) array of values in [0, 255] as binary PGM."""
    img = np.asarray(img)
    if img.ndim != 2:
        raise ValueError(f"expected a 2-D image, got shape {img.shape}")
    h, w = img.shape
    header = f"P5\n{w} {h}\n255\n".encode()
    Path(path).write_bytes(header + img.astype(np.uint8).tobytes())


def read_ppm(path) -> np.ndarray:
    """Read a binary PPM (P6, maxval <= 255) into a (h, w, 3) uint8 array."""
    data = Path(path).read_bytes()
    (w, h, maxval), start = _read_header(data, b"P6")
    if not 0 < maxval <= 255:
        raise ValueError(f"unsupported maxval {maxval}")
    pixels = np.frombuffer(data, dtype=np.uint8, count=w * h * 3, offset=start)
    if pixels.size != w * h * 3:
        raise ValueError("truncated PPM pixel data")
    return pixels.reshape(h, w, 3).copy()


def write_ppm(path, rgb: np.ndarray) -> None:
    """Write a (h, w, 3) array of values in [0, 255] as binary PPM."""
    rgb = np.asarray(rgb)
    if rgb.ndim != 3 or rgb.shape[2] != 3:
        raise ValueError(f"expected a (h, w, 3) image, got shape {rgb.shape}")
    h, w, _ = rgb.shape
    header = f"P6\n{w} {h}\n255\n".encode()
    Path(path).write_bytes(header + rgb.astype(np.uint8).tobytes())
