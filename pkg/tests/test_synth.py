"""Synthetic instance generator and its ground truth."""

import numpy as np
import pytest

from polyhough.dp import angle_window
from polyhough.synth import generate_instance

from conftest import polyline_shifts


def test_deterministic_per_seed():
    a_img, a_truth = generate_instance(32, 32, 4, 20.0, 0.05, seed=7)
    b_img, b_truth = generate_instance(32, 32, 4, 20.0, 0.05, seed=7)
    assert np.array_equal(a_img, b_img)
    assert a_truth == b_truth
    c_img, _ = generate_instance(32, 32, 4, 20.0, 0.05, seed=8)
    assert not np.array_equal(a_img, c_img)


def test_truth_geometry_and_bend_limit():
    for seed in range(20):
        img, truth = generate_instance(24, 24, 3, 15.0, seed=seed)
        s = truth.band_height
        assert len(truth.vertices) == truth.k + 1
        assert [y for _, y in truth.vertices] == [i * s for i in range(truth.k + 1)]
        assert all(0 <= x < truth.width for x, _ in truth.vertices)
        shifts = polyline_shifts(truth.vertices, s)
        for a, b in zip(shifts, shifts[1:]):
            lo, hi = angle_window(a, s, truth.gamma_max)
            assert lo <= b <= hi


def test_stroke_is_drawn_on_truth_path():
    img, truth = generate_instance(32, 32, 4, 20.0, seed=3)
    for x, y in truth.vertices:
        if y < truth.height:
            # the stroke passes within one pixel of every vertex
            assert img[y, max(0, x - 1) : x + 2].max() == 255


def test_salt_fraction_within_binomial_bounds():
    img, _ = generate_instance(64, 64, 4, 20.0, noise_salt=0.05, seed=5)
    white = int((img == 255).sum())
    # the polyline itself contributes ~64 pixels; 5% of 4096 is ~205
    assert 120 <= white <= 450


def test_to_dict_round_trip():
    _, truth = generate_instance(16, 16, 2, 30.0, seed=1)
    doc = truth.to_dict()
    assert doc["vertices"] == [list(v) for v in truth.vertices]
    assert doc["k"] == 2 and doc["seed"] == 1


def test_bad_parameters_rejected():
    for args in [(1, 8, 2, 20.0), (8, 0, 1, 20.0), (8, 8, 9, 20.0), (8, 8, 2, 95.0)]:
        with pytest.raises(ValueError):
            generate_instance(*args)
    with pytest.raises(ValueError):
        generate_instance(8, 8, 2, 20.0, noise_salt=1.5)
