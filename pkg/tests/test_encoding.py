"""Amplitude encoding / decoding tests."""

import numpy as np
import pytest

from walsh_edge import encoding


class TestFlatten:
    def test_columns_stack_first(self):
        assert np.allclose(encoding.flatten_column_major([[1, 2], [3, 4]]), [1, 3, 2, 4])

    def test_single_pixel(self):
        assert np.allclose(encoding.flatten_column_major([[7.0]]), [7.0])

    def test_round_trip_with_decode(self):
        rng = np.random.default_rng(0)
        img = rng.integers(0, 256, size=(8, 4)).astype(float)
        flat = encoding.flatten_column_major(img)
        back = encoding.qpie_decode(flat, 1.0, 8, 4)
        assert np.array_equal(back, img)

    def test_rejects_non_power_of_two(self):
        with pytest.raises(ValueError):
            encoding.flatten_column_major(np.zeros((3, 4)))


class TestEncode:
    def test_uniform_image(self):
        state = encoding.qpie_encode([[1, 1], [1, 1]])
        assert np.allclose(state.amplitudes, [0.5, 0.5, 0.5, 0.5])
        assert state.norm_factor == 2.0

    def test_pythagorean_image(self):
        state = encoding.qpie_encode([[3, 0], [4, 0]])
        assert np.allclose(state.amplitudes, [0.6, 0.8, 0, 0])
        assert state.norm_factor == 5.0

    def test_unit_norm(self):
        rng = np.random.default_rng(1)
        img = rng.integers(0, 256, size=(16, 8)).astype(float)
        state = encoding.qpie_encode(img)
        assert abs(np.linalg.norm(state.amplitudes) - 1.0) < 1e-12

    def test_qubit_count(self):
        state = encoding.qpie_encode(np.ones((16, 8)))
        assert encoding.qubit_count(state.shape) == 4 + 3
        assert state.amplitudes.size == 2 ** encoding.qubit_count(state.shape)

    def test_rejects_all_zero(self):
        with pytest.raises(ValueError):
            encoding.qpie_encode(np.zeros((4, 4)))

    def test_rejects_non_finite(self):
        img = np.ones((4, 4))
        img[0, 0] = np.inf
        with pytest.raises(ValueError):
            encoding.qpie_encode(img)


class TestDecode:
    def test_round_trip(self):
        rng = np.random.default_rng(2)
        img = rng.integers(0, 256, size=(16, 8)).astype(float)
        state = encoding.qpie_encode(img)
        back = encoding.qpie_decode(state.amplitudes, state.norm_factor, 16, 8)
        assert np.max(np.abs(back - img)) < 1e-10

    def test_inverse_of_encode_example(self):
        img = encoding.qpie_decode(np.array([0.6, 0.8, 0, 0]), 5.0, 2, 2)
        assert np.allclose(img, [[3, 0], [4, 0]])

    def test_zero_amplitudes(self):
        assert not encoding.qpie_decode(np.zeros(16), 3.0, 4, 4).any()

    def test_linearity(self):
        rng = np.random.default_rng(3)
        a = rng.standard_normal(16)
        b = rng.standard_normal(16)
        lhs = encoding.qpie_decode(2 * a + b, 4.0, 4, 4)
        rhs = 2 * encoding.qpie_decode(a, 4.0, 4, 4) + encoding.qpie_decode(b, 4.0, 4, 4)
        assert np.max(np.abs(lhs - rhs)) < 1e-12
        # linear in the scale factor too
        assert np.allclose(encoding.qpie_decode(a, 8.0, 4, 4),
                           2 * encoding.qpie_decode(a, 4.0, 4, 4))

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            encoding.qpie_decode(np.zeros(8), 1.0, 4, 4)
