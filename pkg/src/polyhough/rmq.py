"""Range-maximum-with-argmax structures over integer sequences.

Two interchangeable backends: a sparse table (O(n log n) build, O(1)
query) and an implicit segment tree (O(n) build, O(log n) query).  Both
answer inclusive-range queries with the maximum value and the smallest
index attaining it, and both operate column-wise on 2-D arrays so the
dynamic-programming sweep can query every Hough column of a band at once.
"""

from __future__ import annotations

import numpy as np

BACKENDS = ("sparse", "segtree")

# Sentinel low enough to never collide with real scores, high enough to
# survive additions without wrapping int64.
NEG_INF = np.iinfo(np.int64).min // 4


def _as_columns(values: np.ndarray) -> np.ndarray:
    values = np.asarray(values)
    if not np.issubdtype(values.dtype, np.integer):
        values = values.astype(np.int64)
    if values.ndim == 1:
        values = values[:, np.newaxis]
    if values.ndim != 2 or values.shape[0] == 0:
        raise ValueError(f"expected a non-empty 1-D or 2-D array, got shape {values.shape}")
    return values


def _prefer_first(
    v1: np.ndarray, a1: np.ndarray, v2: np.ndarray, a2: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    # first operand must cover the smaller indices so ties keep the
    # smallest argmax
    take = v1 >= v2
    return np.where(take, v1, v2), np.where(take, a1, a2)


class SparseTable:
    """Column-wise sparse table; query(lo, hi) is two table lookups.

    Levels are materialized on demand, so a table only pays for the
    interval sizes actually queried.
    """

    def __init__(self, values: np.ndarray):
        values = _as_columns(values)
        self.n, self.m = values.shape
        args = np.broadcast_to(np.arange(self.n, dtype=np.int32)[:, np.newaxis], values.shape)
        self._vals = [values]
        self._args = [np.ascontiguousarray(args)]

    def _ensure_level(self, level: int) -> None:
        while len(self._vals) <= level:
            built = len(self._vals)
            half = 1 << (built - 1)
            length = self.n - (1 << built) + 1
            pv, pa = self._vals[-1], self._args[-1]
            v, a = _prefer_first(
                pv[:length], pa[:length], pv[half : half + length], pa[half : half + length]
            )
            self._vals.append(v)
            self._args.append(a)

    def query(self, lo: int, hi: int) -> tuple[np.ndarray, np.ndarray]:
        if not 0 <= lo <= hi < self.n:
            raise ValueError(f"bad query range [{lo}, {hi}] for n={self.n}")
        level = (hi - lo + 1).bit_length() - 1
        self._ensure_level(level)
        size = 1 << level
        right = hi - size + 1
        return _prefer_first(
            self._vals[level][lo],
            self._args[level][lo],
            self._vals[level][right],
            self._args[level][right],
        )

    def query_rows(self, lo: np.ndarray, hi: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Batch of inclusive-range queries, grouped by table level."""
        lo = np.asarray(lo)
        hi = np.asarray(hi)
        if lo.min() < 0 or hi.max() >= self.n or (lo > hi).any():
            raise ValueError("bad query ranges")
        vals = np.empty((lo.size, self.m), dtype=self._vals[0].dtype)
        args = np.empty((lo.size, self.m), dtype=np.int32)
        levels = np.array([int(n).bit_length() - 1 for n in hi - lo + 1])
        self._ensure_level(int(levels.max()))
        for level in np.unique(levels):
            rows = np.nonzero(levels == level)[0]
            right = hi[rows] - (1 << level) + 1
            v, a = _prefer_first(
                self._vals[level][lo[rows]],
                self._args[level][lo[rows]],
                self._vals[level][right],
                self._args[level][right],
            )
            vals[rows] = v
            args[rows] = a
        return vals, args


class SegmentTree:
    """Column-wise implicit segment tree padded with -inf sentinels."""

    def __init__(self, values: np.ndarray):
        values = _as_columns(values)
        self.n, self.m = values.shape
        size = 1 << (self.n - 1).bit_length()
        self._size = size
        self._identity = np.iinfo(values.dtype).min // 4
        self._tv = np.full((2 * size, self.m), self._identity, dtype=values.dtype)
        self._ta = np.full((2 * size, self.m), self.n, dtype=np.int32)
        self._tv[size : size + self.n] = values
        self._ta[size : size + self.n] = np.arange(self.n, dtype=np.int32)[:, np.newaxis]
        width = size // 2
        while width >= 1:
            left = slice(2 * width, 4 * width, 2)
            right = slice(2 * width + 1, 4 * width, 2)
            v, a = _prefer_first(self._tv[left], self._ta[left], self._tv[right], self._ta[right])
            self._tv[width : 2 * width] = v
            self._ta[width : 2 * width] = a
            width //= 2

    def query(self, lo: int, hi: int) -> tuple[np.ndarray, np.ndarray]:
        if not 0 <= lo <= hi < self.n:
            raise ValueError(f"bad query range [{lo}, {hi}] for n={self.n}")
        lv = np.full(self.m, self._identity, dtype=self._tv.dtype)
        la = np.full(self.m, self.n, dtype=np.int32)
        rv = lv.copy()
        ra = la.copy()
        left = lo + self._size
        right = hi + 1 + self._size
        while left < right:
            if left & 1:
                lv, la = _prefer_first(lv, la, self._tv[left], self._ta[left])
                left += 1
            if right & 1:
                right -= 1
                rv, ra = _prefer_first(self._tv[right], self._ta[right], rv, ra)
            left >>= 1
            right >>= 1
        return _prefer_first(lv, la, rv, ra)

    def query_rows(self, lo: np.ndarray, hi: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Batch of inclusive-range queries (one tree walk per range)."""
        pairs = [self.query(int(a), int(b)) for a, b in zip(np.asarray(lo), np.asarray(hi))]
        vals = np.stack([p[0] for p in pairs])
        args = np.stack([p[1] for p in pairs])
        return vals, args


class RmqIndex:
    """Immutable single-sequence view over either backend."""

    def __init__(self, values, backend: str = "sparse"):
        if backend not in BACKENDS:
            raise ValueError(f"unknown backend {backend!r}, expected one of {BACKENDS}")
        self.backend = backend
        self._table = make_table(np.asarray(values, dtype=np.int64).reshape(-1, 1), backend)
        self.n = self._table.n

    def query(self, lo: int, hi: int) -> tuple[int, int]:
        vals, args = self._table.query(lo, hi)
        return int(vals[0]), int(args[0])


def make_table(values: np.ndarray, backend: str = "sparse"):
    """Column-wise RMQ structure of the requested backend."""
    if backend == "sparse":
        return SparseTable(values)
    if backend == "segtree":
        return SegmentTree(values)
    raise ValueError(f"unknown backend {backend!r}, expected one of {BACKENDS}")


def rmq_build(values, backend: str = "sparse") -> RmqIndex:
    """Build a queryable index over one sequence of integers."""
    return RmqIndex(values, backend)


def rmq_query(idx: RmqIndex, lo: int, hi: int) -> tuple[int, int]:
    """Maximum and smallest attaining index over the inclusive range."""
    return idx.query(lo, hi)
