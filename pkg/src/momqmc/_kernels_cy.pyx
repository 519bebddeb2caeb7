# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: point-set expansion and the Keister transform.

Interface-identical to `_kernels_py`. Point expansion is bit-identical to
the fallback (integer and exact float arithmetic only); the Keister
transform uses libm transcendentals and may differ from the NumPy fallback
in the last couple of ulps.
"""

from libc.math cimport M_PI, cos, erfc, exp, log, sqrt

import numpy as np

cdef double _SQRT2 = sqrt(2.0)
cdef double _SQRT_2PI = sqrt(2.0 * M_PI)
cdef double _INV_2_53 = 1.0 / 9007199254740992.0
cdef double _COORD_LO = 1.0 / 9007199254740992.0
cdef double _COORD_HI = 1.0 - 1.0 / 9007199254740992.0

# Acklam coefficients; keep in sync with special.py.
cdef double A0 = -3.969683028665376e+01
cdef double A1 = 2.209460984245205e+02
cdef double A2 = -2.759285104469687e+02
cdef double A3 = 1.383577518672690e+02
cdef double A4 = -3.066479806614716e+01
cdef double A5 = 2.506628277459239e+00
cdef double B0 = -5.447609879822406e+01
cdef double B1 = 1.615858368580409e+02
cdef double B2 = -1.556989798598866e+02
cdef double B3 = 6.680131188771972e+01
cdef double B4 = -1.328068155288572e+01
cdef double C0 = -7.784894002430293e-03
cdef double C1 = -3.223964580411365e-01
cdef double C2 = -2.400758277161838e+00
cdef double C3 = -2.549732539343734e+00
cdef double C4 = 4.374664141464968e+00
cdef double C5 = 2.938163982698783e+00
cdef double D0 = 7.784695709041462e-03
cdef double D1 = 3.224671290700398e-01
cdef double D2 = 2.445134137142996e+00
cdef double D3 = 3.754408661907416e+00
cdef double P_LOW = 0.02425
cdef double P_HIGH = 1.0 - 0.02425


cdef double _inv_norm_cdf(double p) nogil:
    cdef double q, r, x, e, u
    if p < P_LOW:
        q = sqrt(-2.0 * log(p))
        x = ((((((C0 * q + C1) * q + C2) * q + C3) * q + C4) * q + C5)
             / ((((D0 * q + D1) * q + D2) * q + D3) * q + 1.0))
    elif p <= P_HIGH:
        q = p - 0.5
        r = q * q
        x = ((((((A0 * r + A1) * r + A2) * r + A3) * r + A4) * r + A5) * q
             / (((((B0 * r + B1) * r + B2) * r + B3) * r + B4) * r + 1.0))
    else:
        q = sqrt(-2.0 * log(1.0 - p))
        x = -((((((C0 * q + C1) * q + C2) * q + C3) * q + C4) * q + C5)
              / ((((D0 * q + D1) * q + D2) * q + D3) * q + 1.0))
    e = 0.5 * erfc(-x / _SQRT2) - p
    u = e * _SQRT_2PI * exp(0.5 * x * x)
    return x - u / (1.0 + 0.5 * x * u)


def lattice_points(gen_vector, int log2n, shift):
    """Rank-1 lattice expansion: frac(i * z / n + shift), row per point."""
    cdef unsigned long long[::1] z = np.ascontiguousarray(gen_vector, dtype=np.uint64)
    cdef double[::1] sh = np.ascontiguousarray(shift, dtype=np.float64)
    cdef Py_ssize_t d = z.shape[0]
    cdef Py_ssize_t n = <Py_ssize_t>1 << log2n
    cdef unsigned long long mask = (<unsigned long long>1 << log2n) - 1
    cdef double inv_n = 1.0 / <double>n
    out_arr = np.empty((n, d), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    cdef Py_ssize_t i, j
    cdef unsigned long long k
    cdef double x
    with nogil:
        for i in range(n):
            for j in range(d):
                k = (<unsigned long long>i * z[j]) & mask
                x = <double>k * inv_n + sh[j]
                if x >= 1.0:
                    x -= 1.0
                out[i, j] = x
    return out_arr


def net_points(columns, digital_shift, int log2n):
    """Digital-net expansion from scrambled column words plus digital shift."""
    cdef unsigned long long[:, ::1] cols = np.ascontiguousarray(columns, dtype=np.uint64)
    cdef unsigned long long[::1] dshift = np.ascontiguousarray(digital_shift, dtype=np.uint64)
    cdef Py_ssize_t d = cols.shape[0]
    cdef Py_ssize_t n = <Py_ssize_t>1 << log2n
    out_arr = np.empty((n, d), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    acc_arr = np.zeros(n, dtype=np.uint64)
    cdef unsigned long long[::1] acc = acc_arr
    cdef Py_ssize_t i, j, t
    cdef unsigned long long ii, word, sj
    with nogil:
        for j in range(d):
            acc[0] = 0
            for i in range(1, n):
                # bits of point i = bits of (i with lowest set bit cleared)
                # XOR the column of that lowest bit
                ii = <unsigned long long>i
                t = 0
                while not (ii >> t) & 1:
                    t += 1
                acc[i] = acc[i & (i - 1)] ^ cols[j, t]
            sj = dshift[j]
            for i in range(n):
                word = (acc[i] << 21) ^ sj
                out[i, j] = <double>word * _INV_2_53
    return out_arr


def keister_values(points, double scale):
    """Per-point values scale * cos(|t|), t = inv_norm_cdf(u) / sqrt(2)."""
    cdef double[:, ::1] pts = np.ascontiguousarray(points, dtype=np.float64)
    cdef Py_ssize_t n = pts.shape[0]
    cdef Py_ssize_t d = pts.shape[1]
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i, j
    cdef double s, u, t
    with nogil:
        for i in range(n):
            s = 0.0
            for j in range(d):
                u = pts[i, j]
                if u < _COORD_LO:
                    u = _COORD_LO
                elif u > _COORD_HI:
                    u = _COORD_HI
                t = _inv_norm_cdf(u) / _SQRT2
                s += t * t
            out[i] = scale * cos(sqrt(s))
    return out_arr
