"""Fast Hough transform of a single band, step by step.

Builds a tiny band containing one slanted segment, shows the dyadic pixel
pattern that stands in for the ideal line, and confirms the butterfly
transform agrees with summing pattern pixels directly.
"""

import numpy as np

from polyhough import dyadic_pattern, fht_band, naive_dyadic_hough, segment_endpoints, shift_to_angle

# a band of height 8: one bright segment leaning one pixel right per two rows
s, width = 8, 12
band = np.zeros((s, width), dtype=np.int64)
for row in range(s):
    band[row, 2 + row // 2] = 100

print("band (one pixel per row, leaning right):")
for row in band:
    print("".join("#" if v else "." for v in row))

# the dyadic pattern with displacement t approximates a line dropping t
# columns over the band height
print("\ndyadic pattern, displacement 4 over height 8:")
print(dyadic_pattern(0, 4, s))

hough = fht_band(band)
print("\nHough image shape (shifts x columns):", hough.shape)

# the brightest cell names the segment: x_top = 2, and the lean of 4
# columns over the band corresponds to shift = s - dx = 8 - 4 = 4
shift, x_top = np.unravel_index(np.argmax(hough), hough.shape)
x_top, x_bottom = segment_endpoints(int(x_top), int(shift), s)
print(f"brightest cell: shift={shift} x_top={x_top} -> x_bottom={x_bottom}")
print(f"segment inclination: {shift_to_angle(int(shift), s):.1f} degrees")
print(f"cell value {hough[shift, x_top]} vs total stroke mass {band.sum()}")

# bit-exact agreement with the direct per-pattern summation
assert np.array_equal(hough, naive_dyadic_hough(band))
print("\nbutterfly transform matches direct pattern summation, bit exact")
