"""Runtime scaling of the two pipeline phases.

Times the precompute phase (smoothing, banding, per-band Hough) and the
DP sweep while the image height doubles, and prints the resulting growth
factors.  The sweep should grow close to linearly with an extra
logarithmic factor from the range-maximum tables.
"""

from polyhough.bench import run_benchmark, rows_to_csv

heights = [128, 256, 512]
rows = run_benchmark(widths=[256], heights=heights, bands=[8], repeats=5)
print(rows_to_csv(rows))

sweep = {r["h"]: r["median_ns"] for r in rows if r["phase"] == "sweep"}
for small, big in zip(heights, heights[1:]):
    print(f"sweep time x{sweep[big] / sweep[small]:.2f} when h: {small} -> {big}")
