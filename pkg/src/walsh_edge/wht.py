"""Walsh-Hadamard transforms in natural and sequency (zero-crossing) order.

All vectors must have power-of-two length.  The forward transforms carry the
1/sqrt(N) factor, so both orderings are orthonormal operators; the natural
order is self-inverse, the sequency order is inverted by the transposed
permutation followed by the natural transform.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

_INV_SQRT2 = 1.0 / np.sqrt(2.0)

# Dense matrices are test-scale tooling only.
MAX_DENSE_QUBITS = 10


def _checked_vector(values) -> np.ndarray:
    vec = np.array(values, dtype=np.float64)
    if vec.ndim != 1:
        raise ValueError(f"expected a 1-D vector, got shape {vec.shape}")
    size = vec.shape[0]
    if size < 2 or size & (size - 1):
        raise ValueError(f"vector length must be a power of two >= 2, got {size}")
    if not np.all(np.isfinite(vec)):
        raise ValueError("vector entries must be finite")
    return vec


def _check_index(value: int, n: int) -> None:
    if n < 1:
        raise ValueError(f"bit width must be >= 1, got {n}")
    if not 0 <= value < (1 << n):
        raise ValueError(f"index {value} out of range for {n} bits")


def natural_wht(values) -> np.ndarray:
    """Self-inverse orthonormal Walsh-Hadamard transform (butterfly, O(N log N))."""
    out = _checked_vector(values)
    size = out.shape[0]
    half = 1
    while half < size:
        pairs = out.reshape(-1, 2, half)
        top = pairs[:, 0, :].copy()
        bottom = pairs[:, 1, :].copy()
        # 1/sqrt(2) applied per stage keeps intermediate magnitudes balanced
        pairs[:, 0, :] = (top + bottom) * _INV_SQRT2
        pairs[:, 1, :] = (top - bottom) * _INV_SQRT2
        half *= 2
    return out


def gray_index(m: int, n: int) -> int:
    """Sequency position of natural-order coefficient ``m`` on ``n`` bits.

    Bit i of the result is the XOR of bits 0..n-1-i of ``m`` (bit 0 = LSB).
    The map is a bijection on [0, 2^n).
    """
    _check_index(m, n)
    acc = 0
    g = 0
    for j in range(n):
        acc ^= (m >> j) & 1
        g |= acc << (n - 1 - j)
    return g


def inverse_gray_index(g: int, n: int) -> int:
    """Natural-order coefficient whose sequency position is ``g``.

    Bit i of the result is the XOR of bits n-i and n-i-1 of ``g``, with the
    out-of-range bit g_n taken as 0.
    """
    _check_index(g, n)
    m = 0
    for i in range(n):
        # g >> n is 0 for in-range g, which realizes the g_n := 0 convention
        m |= (((g >> (n - i)) ^ (g >> (n - i - 1))) & 1) << i
    return m


@lru_cache(maxsize=None)
def _sequency_destinations(n: int) -> np.ndarray:
    """Vectorized gray_index over all indices: dest[m] = gray_index(m, n)."""
    m = np.arange(1 << n, dtype=np.int64)
    acc = np.zeros_like(m)
    g = np.zeros_like(m)
    for j in range(n):
        acc ^= (m >> j) & 1
        g |= acc << (n - 1 - j)
    g.setflags(write=False)
    return g


def sequency_wht(values) -> np.ndarray:
    """Walsh-Hadamard transform with coefficients sorted by zero-crossing count."""
    coeffs = natural_wht(values)
    n = int(coeffs.shape[0]).bit_length() - 1
    out = np.empty_like(coeffs)
    out[_sequency_destinations(n)] = coeffs
    return out


def inverse_sequency_wht(values) -> np.ndarray:
    """Inverse of :func:`sequency_wht`: undo the ordering, then transform back."""
    spect = _checked_vector(values)
    n = int(spect.shape[0]).bit_length() - 1
    return natural_wht(spect[_sequency_destinations(n)])


def highpass_classical(coeffs, cutoff: int) -> np.ndarray:
    """Zero every sequency-ordered coefficient below ``cutoff``."""
    out = _checked_vector(coeffs)
    size = out.shape[0]
    if not 1 <= cutoff <= size - 1:
        raise ValueError(f"cutoff must be in [1, {size - 1}], got {cutoff}")
    out[:cutoff] = 0.0
    return out


def _check_matrix_width(n: int) -> None:
    if n < 1:
        raise ValueError(f"qubit count must be >= 1, got {n}")
    if n > MAX_DENSE_QUBITS:
        raise ValueError(
            f"dense matrix for {n} qubits exceeds the {MAX_DENSE_QUBITS}-qubit limit"
        )


def natural_wht_matrix(n: int) -> np.ndarray:
    """Dense N x N natural-order matrix, entries (-1)^popcount(m & k) / sqrt(N)."""
    _check_matrix_width(n)
    size = 1 << n
    idx = np.arange(size)
    anded = idx[:, None] & idx[None, :]
    parity = np.zeros_like(anded)
    for j in range(n):
        parity ^= (anded >> j) & 1
    return np.where(parity, -1.0, 1.0) / np.sqrt(size)


def sequency_wht_matrix(n: int) -> np.ndarray:
    """Dense sequency-order matrix; row g has exactly g sign changes."""
    rows = natural_wht_matrix(n)
    order = np.array([inverse_gray_index(g, n) for g in range(1 << n)])
    return rows[order]
