"""Grayscale image I/O (binary PGM and PNG) and deterministic test patterns."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np
from PIL import Image as PilImage
from scipy import ndimage

from .encoding import is_power_of_two, validate_image


def transpose(img) -> np.ndarray:
    """Swap rows and columns; an involution."""
    return np.asarray(img, dtype=np.float64).T.copy()


def pad_to_power_of_two(img) -> np.ndarray:
    """Zero-pad bottom/right so both dimensions become powers of two."""
    arr = np.asarray(img, dtype=np.float64)
    if arr.ndim != 2:
        raise ValueError(f"image must be 2-D, got shape {arr.shape}")
    padded_shape = tuple(1 << (int(d - 1).bit_length()) for d in arr.shape)
    out = np.zeros(padded_shape, dtype=np.float64)
    out[: arr.shape[0], : arr.shape[1]] = arr
    return out


def _read_pgm(path: Path) -> np.ndarray:
    data = path.read_bytes()
    pos = 0

    def next_token() -> bytes:
        nonlocal pos
        while pos < len(data):
            ch = data[pos : pos + 1]
            if ch == b"#":
                while pos < len(data) and data[pos : pos + 1] != b"\n":
                    pos += 1
            elif ch.isspace():
                pos += 1
            else:
                break
        start = pos
        while pos < len(data) and not data[pos : pos + 1].isspace():
            pos += 1
        if start == pos:
            raise ValueError(f"{path}: truncated PGM header")
        return data[start:pos]

    magic = next_token()
    if magic != b"P5":
        raise ValueError(f"{path}: unsupported PGM magic {magic!r} (binary P5 only)")
    try:
        width = int(next_token())
        height = int(next_token())
        maxval = int(next_token())
    except ValueError as exc:
        raise ValueError(f"{path}: corrupt PGM header ({exc})") from None
    if width < 1 or height < 1:
        raise ValueError(f"{path}: invalid PGM dimensions {width}x{height}")
    if maxval > 255:
        raise ValueError(f"{path}: unsupported bit depth (maxval {maxval} > 255)")
    if maxval < 1:
        raise ValueError(f"{path}: invalid PGM maxval {maxval}")
    pos += 1  # single whitespace byte separates header from raster
    raster = data[pos : pos + width * height]
    if len(raster) < width * height:
        raise ValueError(f"{path}: truncated PGM raster")
    return (
        np.frombuffer(raster, dtype=np.uint8)
        .reshape(height, width)
        .astype(np.float64)
    )


def _write_pgm(arr: np.ndarray, path: Path) -> None:
    quantized = np.clip(np.rint(arr), 0, 255).astype(np.uint8)
    header = f"P5\n{arr.shape[1]} {arr.shape[0]}\n255\n".encode("ascii")
    path.write_bytes(header + quantized.tobytes())


def _read_with_pillow(path: Path) -> np.ndarray:
    try:
        with PilImage.open(path) as im:
            if im.mode == "L":
                return np.asarray(im, dtype=np.float64)
            if im.mode in ("I", "I;16", "I;16B", "I;16L", "F"):
                raise ValueError(f"{path}: unsupported bit depth (mode {im.mode})")
            # multi-channel input: plain channel average
            return np.asarray(im.convert("RGB"), dtype=np.float64).mean(axis=2)
    except ValueError:
        raise
    except Exception as exc:
        raise ValueError(f"{path}: cannot read image ({exc})") from exc


def load_image(path, pad: bool = False) -> np.ndarray:
    """Read an 8-bit grayscale image as float64.

    Binary PGM is parsed directly, everything else goes through Pillow with
    multi-channel inputs averaged to one channel.  Dimensions must be powers
    of two unless ``pad`` is set, in which case the image is zero-padded.
    """
    path = Path(path)
    if path.suffix.lower() == ".pgm":
        arr = _read_pgm(path)
    else:
        arr = _read_with_pillow(path)
    rows, cols = arr.shape
    if not (is_power_of_two(rows) and is_power_of_two(cols)):
        if not pad:
            raise ValueError(
                f"{path}: dimensions {rows}x{cols} are not powers of two "
                "(pass pad=True to zero-pad)"
            )
        arr = pad_to_power_of_two(arr)
    return arr


def save_image(img, path) -> None:
    """Write an image as 8-bit PGM or PNG, clipping and rounding intensities."""
    arr = np.asarray(img, dtype=np.float64)
    if arr.ndim != 2:
        raise ValueError(f"image must be 2-D, got shape {arr.shape}")
    path = Path(path)
    suffix = path.suffix.lower()
    if suffix == ".pgm":
        _write_pgm(arr, path)
    elif suffix == ".png":
        quantized = np.clip(np.rint(arr), 0, 255).astype(np.uint8)
        PilImage.fromarray(quantized, mode="L").save(path)
    else:
        raise ValueError(f"unsupported image extension {suffix!r} (use .pgm or .png)")


# --- generators ---------------------------------------------------------------


def _checked_shape(size) -> tuple[int, int]:
    rows, cols = int(size[0]), int(size[1])
    if not (is_power_of_two(rows) and is_power_of_two(cols)):
        raise ValueError(f"generator size must be powers of two, got {rows}x{cols}")
    return rows, cols


def checkerboard(size, tile: int = 8) -> np.ndarray:
    """Alternating tiles at 0 and 255; tiles truncate at the border."""
    rows, cols = _checked_shape(size)
    if tile < 1:
        raise ValueError(f"tile size must be >= 1, got {tile}")
    r, c = np.indices((rows, cols))
    return np.where(((r // tile) + (c // tile)) % 2 == 0, 255.0, 0.0)


def step(size, column: int | None = None) -> np.ndarray:
    """Two vertical half-planes: dark left of ``column``, bright from it on."""
    rows, cols = _checked_shape(size)
    if column is None:
        column = cols // 2
    if not 1 <= column <= cols - 1:
        raise ValueError(f"step column must be in [1, {cols - 1}], got {column}")
    img = np.zeros((rows, cols), dtype=np.float64)
    img[:, column:] = 255.0
    return img


def constant(size, value: float = 128.0) -> np.ndarray:
    rows, cols = _checked_shape(size)
    if not np.isfinite(value):
        raise ValueError("constant value must be finite")
    return np.full((rows, cols), float(value))


def blobs(size, seed: int = 0, smoothing_passes: int = 3) -> np.ndarray:
    """Binary blobs: seeded value noise, box-blurred, thresholded at the median."""
    rows, cols = _checked_shape(size)
    rng = np.random.default_rng(seed)
    field = rng.random((rows, cols))
    blur = max(3, min(rows, cols) // 8)
    for _ in range(smoothing_passes):
        field = ndimage.uniform_filter(field, size=blur, mode="wrap")
    return np.where(field >= np.median(field), 255.0, 0.0)


def polygon(size, vertices=None, seed: int = 0) -> np.ndarray:
    """Filled convex polygon at 255 on a black background.

    Without explicit vertices, a convex polygon is sampled from the seed as
    points on a randomly scaled and rotated ellipse.
    """
    rows, cols = _checked_shape(size)
    if vertices is None:
        rng = np.random.default_rng(seed)
        count = int(rng.integers(3, 9))
        angles = np.sort(rng.uniform(0.0, 2.0 * np.pi, size=count))
        semi_r = rng.uniform(0.25, 0.45) * rows
        semi_c = rng.uniform(0.25, 0.45) * cols
        tilt = rng.uniform(0.0, np.pi)
        center_r = rows / 2 + rng.uniform(-0.1, 0.1) * rows
        center_c = cols / 2 + rng.uniform(-0.1, 0.1) * cols
        pr = semi_r * np.cos(angles)
        pc = semi_c * np.sin(angles)
        vert_r = center_r + pr * np.cos(tilt) - pc * np.sin(tilt)
        vert_c = center_c + pr * np.sin(tilt) + pc * np.cos(tilt)
        vertices = list(zip(vert_r, vert_c))
    verts = np.asarray(vertices, dtype=np.float64)
    if verts.ndim != 2 or verts.shape[0] < 3 or verts.shape[1] != 2:
        raise ValueError("vertices must be a list of at least 3 (row, col) pairs")
    # orient counter-clockwise so the half-plane test is uniform
    area = 0.0
    for i in range(verts.shape[0]):
        r1, c1 = verts[i]
        r2, c2 = verts[(i + 1) % verts.shape[0]]
        area += r1 * c2 - r2 * c1
    if area < 0:
        verts = verts[::-1]
    grid_r, grid_c = np.indices((rows, cols), dtype=np.float64)
    inside = np.ones((rows, cols), dtype=bool)
    for i in range(verts.shape[0]):
        r1, c1 = verts[i]
        r2, c2 = verts[(i + 1) % verts.shape[0]]
        cross = (r2 - r1) * (grid_c - c1) - (c2 - c1) * (grid_r - r1)
        inside &= cross >= 0
    return np.where(inside, 255.0, 0.0)


@dataclass(frozen=True)
class GeneratorSpec:
    """Recipe for a deterministic test image."""

    kind: str
    size: tuple[int, int]
    seed: int = 0
    tile: int = 8
    column: int | None = None
    vertices: tuple[tuple[float, float], ...] | None = None
    value: float = 128.0


def generate(spec: GeneratorSpec) -> np.ndarray:
    """Materialize a spec; identical spec+seed produces identical pixels."""
    size = _checked_shape(spec.size)
    if spec.kind == "checkerboard":
        img = checkerboard(size, tile=spec.tile)
    elif spec.kind == "blobs":
        img = blobs(size, seed=spec.seed)
    elif spec.kind == "polygon":
        img = polygon(size, vertices=spec.vertices, seed=spec.seed)
    elif spec.kind == "step":
        img = step(size, column=spec.column)
    elif spec.kind == "constant":
        img = constant(size, value=spec.value)
    else:
        raise ValueError(f"unknown generator kind {spec.kind!r}")
    return validate_image(img)
