"""SSIM and error-metric tests."""

import numpy as np
import pytest

from walsh_edge import metrics


class TestSsim:
    def test_self_similarity(self):
        rng = np.random.default_rng(0)
        img = rng.integers(0, 256, size=(32, 32)).astype(float)
        assert abs(metrics.ssim(img, img) - 1.0) < 1e-9

    def test_symmetry(self):
        rng = np.random.default_rng(1)
        a = rng.integers(0, 256, size=(32, 32)).astype(float)
        b = rng.integers(0, 256, size=(32, 32)).astype(float)
        assert abs(metrics.ssim(a, b) - metrics.ssim(b, a)) < 1e-12

    def test_opposite_constants_near_zero(self):
        a = np.zeros((16, 16))
        b = np.full((16, 16), 255.0)
        value = metrics.ssim(a, b)
        # closed form for constant patches: C1 / (255^2 + C1)
        c1 = (0.01 * 255.0) ** 2
        assert abs(value - c1 / (255.0**2 + c1)) < 1e-12
        assert value < 0.01

    def test_uniform_window(self):
        rng = np.random.default_rng(2)
        img = rng.integers(0, 256, size=(16, 16)).astype(float)
        params = metrics.SsimParams(window="uniform")
        assert params.resolved_size() == 7
        assert abs(metrics.ssim(img, img, params) - 1.0) < 1e-9

    def test_range(self):
        rng = np.random.default_rng(3)
        for _ in range(5):
            a = rng.integers(0, 256, size=(16, 16)).astype(float)
            b = rng.integers(0, 256, size=(16, 16)).astype(float)
            assert -1.0 <= metrics.ssim(a, b) <= 1.0

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            metrics.ssim(np.zeros((16, 16)), np.zeros((16, 32)))

    def test_image_smaller_than_window(self):
        with pytest.raises(ValueError):
            metrics.ssim(np.zeros((8, 8)), np.zeros((8, 8)))  # default 11x11 window

    def test_bad_window_kind(self):
        with pytest.raises(ValueError):
            metrics.ssim(np.zeros((16, 16)), np.zeros((16, 16)),
                         metrics.SsimParams(window="hann"))


class TestErrors:
    def test_identical(self):
        img = np.arange(16.0).reshape(4, 4)
        assert metrics.l2_error(img, img) == 0.0
        assert metrics.max_abs_error(img, img) == 0.0

    def test_single_pixel_difference(self):
        a = np.zeros((4, 4))
        b = a.copy()
        b[1, 2] = 3.0
        assert metrics.l2_error(a, b) == 3.0
        assert metrics.max_abs_error(a, b) == 3.0

    def test_homogeneity(self):
        rng = np.random.default_rng(4)
        img = rng.standard_normal((8, 8))
        assert abs(metrics.l2_error(2 * img, np.zeros_like(img))
                   - 2 * metrics.l2_error(img, np.zeros_like(img))) < 1e-12

    def test_triangle_inequality(self):
        rng = np.random.default_rng(5)
        for _ in range(10):
            a, b, c = (rng.standard_normal((8, 8)) for _ in range(3))
            assert metrics.l2_error(a, c) <= (
                metrics.l2_error(a, b) + metrics.l2_error(b, c) + 1e-12
            )

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            metrics.l2_error(np.zeros((4, 4)), np.zeros((4, 8)))
