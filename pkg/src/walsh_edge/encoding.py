"""Amplitude encoding of grayscale images onto a quantum register.

An image with power-of-two dimensions is flattened column by column and
scaled to unit Euclidean norm; the scale factor is kept so that filtered
amplitudes can be mapped back to intensity units exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def is_power_of_two(value: int) -> bool:
    return value >= 1 and value & (value - 1) == 0


def validate_image(pixels) -> np.ndarray:
    """Return the image as a float64 array, checking shape and finiteness."""
    arr = np.asarray(pixels, dtype=np.float64)
    if arr.ndim != 2:
        raise ValueError(f"image must be 2-D, got shape {arr.shape}")
    rows, cols = arr.shape
    if not (is_power_of_two(rows) and is_power_of_two(cols)):
        raise ValueError(f"image dimensions must be powers of two, got {rows}x{cols}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("image intensities must be finite")
    return arr


def qubit_count(shape: tuple[int, int]) -> int:
    rows, cols = shape
    return (rows.bit_length() - 1) + (cols.bit_length() - 1)


def flatten_column_major(img) -> np.ndarray:
    """Stack columns: output index x + y * n_rows holds pixel (x, y)."""
    return validate_image(img).flatten(order="F")


@dataclass(frozen=True, eq=False)
class QpieState:
    """Unit-norm amplitude vector plus the scale that restores intensities."""

    amplitudes: np.ndarray
    norm_factor: float
    shape: tuple[int, int]


def qpie_encode(img) -> QpieState:
    """Normalize pixel intensities into amplitudes; rejects all-zero images."""
    arr = validate_image(img)
    flat = arr.flatten(order="F")
    scale = float(np.linalg.norm(flat))
    if scale == 0.0:
        raise ValueError("cannot encode an all-zero image (zero norm)")
    return QpieState(flat / scale, scale, arr.shape)


def qpie_decode(amplitudes, norm_factor: float, n_rows: int, n_cols: int) -> np.ndarray:
    """Exact linear inverse of the encoding; output may carry signs."""
    amp = np.asarray(amplitudes, dtype=np.float64)
    if amp.ndim != 1 or amp.shape[0] != n_rows * n_cols:
        raise ValueError(
            f"expected {n_rows * n_cols} amplitudes for a {n_rows}x{n_cols} image, "
            f"got shape {amp.shape}"
        )
    return (norm_factor * amp).reshape((n_rows, n_cols), order="F")
