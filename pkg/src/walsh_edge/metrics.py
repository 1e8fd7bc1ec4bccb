"""Similarity and error metrics for comparing edge maps."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import ndimage


@dataclass(frozen=True)
class SsimParams:
    """Windowed-SSIM parameters; the literature defaults.

    ``window`` selects a gaussian window (11x11, sigma 1.5) or a uniform one
    (7x7); an explicit ``size`` overrides the per-window default.
    """

    window: str = "gaussian"
    size: int | None = None
    sigma: float = 1.5
    k1: float = 0.01
    k2: float = 0.03
    dynamic_range: float = 255.0

    def resolved_size(self) -> int:
        if self.size is not None:
            return self.size
        return 11 if self.window == "gaussian" else 7

    def as_dict(self) -> dict:
        return {
            "window": self.window,
            "size": self.resolved_size(),
            "sigma": self.sigma if self.window == "gaussian" else None,
            "k1": self.k1,
            "k2": self.k2,
            "dynamic_range": self.dynamic_range,
        }


def _kernel(params: SsimParams) -> np.ndarray:
    size = params.resolved_size()
    if size % 2 == 0 or size < 1:
        raise ValueError(f"window size must be odd and positive, got {size}")
    if params.window == "uniform":
        kernel = np.ones((size, size))
    elif params.window == "gaussian":
        offsets = np.arange(size) - size // 2
        line = np.exp(-(offsets**2) / (2.0 * params.sigma**2))
        kernel = np.outer(line, line)
    else:
        raise ValueError(f"unknown window kind {params.window!r}")
    return kernel / kernel.sum()


def _pair(a, b) -> tuple[np.ndarray, np.ndarray]:
    x = np.asarray(a, dtype=np.float64)
    y = np.asarray(b, dtype=np.float64)
    if x.ndim != 2 or y.ndim != 2:
        raise ValueError("inputs must be 2-D images")
    if x.shape != y.shape:
        raise ValueError(f"image shapes differ: {x.shape} vs {y.shape}")
    return x, y


def ssim(a, b, params: SsimParams | None = None) -> float:
    """Mean local structural similarity over fully-contained sliding windows."""
    x, y = _pair(a, b)
    params = params or SsimParams()
    size = params.resolved_size()
    if min(x.shape) < size:
        raise ValueError(f"images must be at least {size}x{size} for this window")
    kernel = _kernel(params)

    def windowed(img):
        return ndimage.convolve(img, kernel, mode="constant")

    mu_x = windowed(x)
    mu_y = windowed(y)
    var_x = windowed(x * x) - mu_x * mu_x
    var_y = windowed(y * y) - mu_y * mu_y
    cov = windowed(x * y) - mu_x * mu_y

    c1 = (params.k1 * params.dynamic_range) ** 2
    c2 = (params.k2 * params.dynamic_range) ** 2
    ssim_map = ((2 * mu_x * mu_y + c1) * (2 * cov + c2)) / (
        (mu_x * mu_x + mu_y * mu_y + c1) * (var_x + var_y + c2)
    )
    margin = size // 2
    valid = ssim_map[margin : x.shape[0] - margin, margin : x.shape[1] - margin]
    return float(valid.mean())


def l2_error(a, b) -> float:
    """Frobenius norm of the pixel difference."""
    x, y = _pair(a, b)
    return float(np.linalg.norm(x - y))


def max_abs_error(a, b) -> float:
    x, y = _pair(a, b)
    return float(np.max(np.abs(x - y)))
