# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the hot inner loops.

Same interface and layout conventions as the NumPy fallback ``_kernels_py``:
validated inputs, grid rows indexed by c-1, columns by d-1.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, sin, fabs

cnp.import_array()


def mod_inverse_table(long long p):
    cdef cnp.ndarray[cnp.int64_t, ndim=1] inv = np.zeros(p, dtype=np.int64)
    cdef long long i
    if p > 1:
        inv[1] = 1
    # (p - p//i) keeps every operand nonnegative (cdivision truncates)
    for i in range(2, p):
        inv[i] = ((p - p // i) * inv[p % i]) % p
    return inv


cdef void _fill_root_tables(long long p, double[::1] ct, double[::1] st):
    cdef long long k
    cdef double w = 2.0 * np.pi / p
    for k in range(p):
        ct[k] = cos(w * k)
        st[k] = sin(w * k)


def kloosterman_block(long long p, long long c_lo, long long c_hi):
    """Raw Kloosterman sums for c in [c_lo, c_hi), all d in 1..p-1.

    Direct term-by-term summation with Kahan compensation; returns
    (real-part block, max |imag| over the block).
    """
    cdef cnp.ndarray[cnp.float64_t, ndim=2] out = np.empty(
        (c_hi - c_lo, p - 1), dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] ct_arr = np.empty(p, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] st_arr = np.empty(p, dtype=np.float64)
    cdef double[::1] ct = ct_arr, st = st_arr
    _fill_root_tables(p, ct, st)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] inv = mod_inverse_table(p)
    # dxv[d-1, x-1] = d * x^-1 mod p, shared across rows of the block
    cdef cnp.ndarray[cnp.int64_t, ndim=2] dxv_arr = np.empty((p - 1, p - 1), dtype=np.int64)
    cdef long long[:, ::1] dxv = dxv_arr
    cdef long long[::1] invv = inv
    cdef long long c, d, x, k
    for d in range(1, p):
        for x in range(1, p):
            dxv[d - 1, x - 1] = (d * invv[x]) % p
    cdef cnp.ndarray[cnp.int64_t, ndim=1] cx_arr = np.empty(p - 1, dtype=np.int64)
    cdef long long[::1] cx = cx_arr
    cdef double sr, cr, si, ci, t, yv
    cdef double max_imag = 0.0
    cdef Py_ssize_t row
    for c in range(c_lo, c_hi):
        row = c - c_lo
        for x in range(1, p):
            cx[x - 1] = (c * x) % p
        for d in range(1, p):
            sr = 0.0; cr = 0.0; si = 0.0; ci = 0.0
            for x in range(p - 1):
                k = cx[x] + dxv[d - 1, x]
                if k >= p:
                    k -= p
                yv = ct[k] - cr
                t = sr + yv
                cr = (t - sr) - yv
                sr = t
                yv = st[k] - ci
                t = si + yv
                ci = (t - si) - yv
                si = t
            out[row, d - 1] = sr
            if fabs(si) > max_imag:
                max_imag = fabs(si)
    return out, max_imag


def kloosterman_batch(cs, ds, long long p):
    """Kloosterman sums for paired coefficient arrays; returns (re, im)."""
    cdef cnp.ndarray[cnp.int64_t, ndim=1] cs_arr = np.ascontiguousarray(cs, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] ds_arr = np.ascontiguousarray(ds, dtype=np.int64)
    cdef Py_ssize_t n = cs_arr.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] re = np.empty(n, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] im = np.empty(n, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] ct_arr = np.empty(p, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] st_arr = np.empty(p, dtype=np.float64)
    cdef double[::1] ct = ct_arr, st = st_arr
    _fill_root_tables(p, ct, st)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] inv = mod_inverse_table(p)
    cdef long long[::1] invv = inv
    cdef long long c, d, x, k
    cdef double sr, cr, si, ci, t, yv
    cdef Py_ssize_t i
    for i in range(n):
        c = cs_arr[i]; d = ds_arr[i]
        sr = 0.0; cr = 0.0; si = 0.0; ci = 0.0
        for x in range(1, p):
            k = (c * x + d * invv[x]) % p
            yv = ct[k] - cr
            t = sr + yv
            cr = (t - sr) - yv
            sr = t
            yv = st[k] - ci
            t = si + yv
            ci = (t - si) - yv
            si = t
        re[i] = sr
        im[i] = si
    return re, im


cdef cnp.ndarray[cnp.int8_t, ndim=1] _chi_table(long long p):
    cdef cnp.ndarray[cnp.int8_t, ndim=1] chi = np.full(p, -1, dtype=np.int8)
    cdef long long y
    for y in range(p):
        chi[(y * y) % p] = 1
    chi[0] = 0
    return chi


cdef cnp.ndarray[cnp.int64_t, ndim=1] _sqrt_count_table(long long p):
    cdef cnp.ndarray[cnp.int64_t, ndim=1] cnt = np.zeros(p, dtype=np.int64)
    cdef long long y
    for y in range(p):
        cnt[(y * y) % p] += 1
    return cnt


def trace_block(long long p, long long c_lo, long long c_hi):
    """Frobenius traces for c in [c_lo, c_hi), all d in 1..p-1, each cell
    cross-checked against direct point counting.  Returns (grid, mismatches).
    """
    cdef cnp.ndarray[cnp.int32_t, ndim=2] out = np.empty(
        (c_hi - c_lo, p - 1), dtype=np.int32)
    cdef cnp.ndarray[cnp.int8_t, ndim=1] chi_arr = _chi_table(p)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] cnt_arr = _sqrt_count_table(p)
    cdef signed char[::1] chi = chi_arr
    cdef long long[::1] cnt = cnt_arr
    cdef cnp.ndarray[cnp.int64_t, ndim=1] base_arr = np.empty(p, dtype=np.int64)
    cdef long long[::1] base = base_arr
    cdef long long c, d, x, v, s, affine, mismatches = 0
    cdef Py_ssize_t row
    for c in range(c_lo, c_hi):
        row = c - c_lo
        for x in range(p):
            base[x] = (((x * x) % p) * x + c * x) % p
        for d in range(1, p):
            s = 0
            affine = 0
            for x in range(p):
                v = base[x] + d
                if v >= p:
                    v -= p
                s += chi[v]
                affine += cnt[v]
            if -s != p - affine:
                mismatches += 1
            out[row, d - 1] = <int>(-s)
    return out, mismatches


def trace_batch(cs, ds, long long p):
    """Character-sum traces for paired coefficient arrays."""
    cdef cnp.ndarray[cnp.int64_t, ndim=1] cs_arr = np.ascontiguousarray(cs, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] ds_arr = np.ascontiguousarray(ds, dtype=np.int64)
    cdef Py_ssize_t n = cs_arr.shape[0]
    cdef cnp.ndarray[cnp.int64_t, ndim=1] out = np.empty(n, dtype=np.int64)
    cdef cnp.ndarray[cnp.int8_t, ndim=1] chi_arr = _chi_table(p)
    cdef signed char[::1] chi = chi_arr
    cdef long long c, d, x, s
    cdef Py_ssize_t i
    for i in range(n):
        c = cs_arr[i] % p; d = ds_arr[i] % p
        if c < 0: c += p
        if d < 0: d += p
        s = 0
        for x in range(p):
            s += chi[(((x * x) % p) * x + c * x + d) % p]
        out[i] = -s
    return out


def affine_batch(cs, ds, long long p):
    """Affine point counts via direct solution counting."""
    cdef cnp.ndarray[cnp.int64_t, ndim=1] cs_arr = np.ascontiguousarray(cs, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] ds_arr = np.ascontiguousarray(ds, dtype=np.int64)
    cdef Py_ssize_t n = cs_arr.shape[0]
    cdef cnp.ndarray[cnp.int64_t, ndim=1] out = np.empty(n, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] cnt_arr = _sqrt_count_table(p)
    cdef long long[::1] cnt = cnt_arr
    cdef long long c, d, x, s
    cdef Py_ssize_t i
    for i in range(n):
        c = cs_arr[i] % p; d = ds_arr[i] % p
        if c < 0: c += p
        if d < 0: d += p
        s = 0
        for x in range(p):
            s += cnt[(((x * x) % p) * x + c * x + d) % p]
        out[i] = s
    return out


def first_match(bits, word, Py_ssize_t start):
    """Smallest k >= start with bits[k:k+len(word)] == word, else -1."""
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] b = np.ascontiguousarray(bits, dtype=np.uint8)
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] w = np.ascontiguousarray(word, dtype=np.uint8)
    cdef Py_ssize_t n = b.shape[0], d = w.shape[0]
    cdef Py_ssize_t k, j
    cdef bint ok
    for k in range(start, n - d + 1):
        ok = True
        for j in range(d):
            if b[k + j] != w[j]:
                ok = False
                break
        if ok:
            return k
    return -1
