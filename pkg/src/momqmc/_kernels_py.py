"""Pure-NumPy kernels; interface-identical fallback for the compiled core.

Point expansion uses only integer and exact float operations, so lattice and
net coordinates are bit-identical to the compiled backend. The Keister
transform goes through NumPy/Cephes transcendentals instead of libm, so its
values may differ from the compiled backend in the last couple of ulps.
"""

from __future__ import annotations

import numpy as np
from scipy.special import erfc

from .special import _A, _B, _C, _D, _P_HIGH, _P_LOW

_SQRT2 = np.sqrt(2.0)
_SQRT_2PI = np.sqrt(2.0 * np.pi)
_INV_2_53 = 2.0**-53
_COORD_LO = 2.0**-53
_COORD_HI = 1.0 - 2.0**-53


def lattice_points(gen_vector: np.ndarray, log2n: int, shift: np.ndarray) -> np.ndarray:
    """Rank-1 lattice expansion: frac(i * z / n + shift), row per point."""
    n = 1 << log2n
    idx = np.arange(n, dtype=np.uint64)
    k = (idx[:, None] * gen_vector[None, :]) & np.uint64(n - 1)
    coords = k.astype(np.float64) * (1.0 / n) + shift[None, :]
    coords[coords >= 1.0] -= 1.0
    return coords


def net_points(columns: np.ndarray, digital_shift: np.ndarray, log2n: int) -> np.ndarray:
    """Digital-net expansion from scrambled column words plus digital shift.

    Column words are 32-bit with the most significant bit holding the first
    output digit; outputs are widened to 53 bits before the shift XOR.
    """
    n = 1 << log2n
    d = columns.shape[0]
    idx = np.arange(n, dtype=np.uint64)
    out = np.empty((n, d), dtype=np.float64)
    for j in range(d):
        bits = np.zeros(n, dtype=np.uint64)
        for k in range(log2n):
            mask = ((idx >> np.uint64(k)) & np.uint64(1)).astype(bool)
            bits[mask] ^= columns[j, k]
        words = (bits << np.uint64(21)) ^ digital_shift[j]
        out[:, j] = words.astype(np.float64) * _INV_2_53
    return out


def _inv_norm_cdf(p: np.ndarray) -> np.ndarray:
    # Same Acklam + one-Halley-step algorithm as special.inv_norm_cdf.
    x = np.empty_like(p)
    lo = p < _P_LOW
    hi = p > _P_HIGH
    mid = ~(lo | hi)

    if lo.any():
        q = np.sqrt(-2.0 * np.log(p[lo]))
        x[lo] = ((((((_C[0] * q + _C[1]) * q + _C[2]) * q + _C[3]) * q + _C[4]) * q + _C[5])
                 / ((((_D[0] * q + _D[1]) * q + _D[2]) * q + _D[3]) * q + 1.0))
    if mid.any():
        q = p[mid] - 0.5
        r = q * q
        x[mid] = ((((((_A[0] * r + _A[1]) * r + _A[2]) * r + _A[3]) * r + _A[4]) * r + _A[5]) * q
                  / (((((_B[0] * r + _B[1]) * r + _B[2]) * r + _B[3]) * r + _B[4]) * r + 1.0))
    if hi.any():
        q = np.sqrt(-2.0 * np.log(1.0 - p[hi]))
        x[hi] = -((((((_C[0] * q + _C[1]) * q + _C[2]) * q + _C[3]) * q + _C[4]) * q + _C[5])
                  / ((((_D[0] * q + _D[1]) * q + _D[2]) * q + _D[3]) * q + 1.0))

    e = 0.5 * erfc(-x / _SQRT2) - p
    u = e * _SQRT_2PI * np.exp(0.5 * x * x)
    return x - u / (1.0 + 0.5 * x * u)


def keister_values(points: np.ndarray, scale: float) -> np.ndarray:
    """Per-point values scale * cos(|t|), t = inv_norm_cdf(u) / sqrt(2)."""
    u = np.clip(points, _COORD_LO, _COORD_HI)
    t = _inv_norm_cdf(u) / _SQRT2
    return scale * np.cos(np.sqrt(np.sum(t * t, axis=1)))
