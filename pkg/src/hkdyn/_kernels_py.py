"""NumPy fallback for the hot kernels.

Mirrors the interface of the compiled module ``_kernels_cy``.  Every function
assumes validated inputs (p an odd prime below 2**31, coefficients already
reduced mod p where required); validation belongs to the calling modules.

Grid/block layout: row index is c-1, column index is d-1, both running over
the nonzero residues 1..p-1.
"""

import numpy as np


def mod_inverse_table(p):
    """inv[x] = x^-1 mod p for x in 1..p-1 (inv[0] = 0), via the standard
    O(p) recurrence inv[i] = -(p//i) * inv[p mod i]."""
    inv = np.zeros(p, dtype=np.int64)
    if p > 1:
        inv[1] = 1
    for i in range(2, p):
        inv[i] = ((p - p // i) * inv[p % i]) % p
    return inv


def _root_tables(p):
    k = np.arange(p, dtype=np.float64)
    ang = 2.0 * np.pi * k / p
    return np.cos(ang), np.sin(ang)


def kloosterman_block(p, c_lo, c_hi):
    """Raw Kloosterman sums sum_x e((c*x + d*x^-1)/p) for c in [c_lo, c_hi)
    and all d in 1..p-1.  Returns (real parts, max |imag| over the block).

    Each cell is summed directly over its p-1 terms; no multiplicative
    shortcut is taken, so the block doubles as a brute-force sweep.
    """
    ct, st = _root_tables(p)
    x = np.arange(1, p, dtype=np.int64)
    xinv = mod_inverse_table(p)[1:]
    ds = np.arange(1, p, dtype=np.int64)
    dxv = (ds[:, None] * xinv[None, :]) % p  # (d, x)
    out = np.empty((c_hi - c_lo, p - 1), dtype=np.float64)
    max_imag = 0.0
    for ci, c in enumerate(range(c_lo, c_hi)):
        idx = (c * x[None, :] + dxv) % p  # (d, x)
        out[ci] = ct[idx].sum(axis=1)
        mi = np.abs(st[idx].sum(axis=1)).max()
        if mi > max_imag:
            max_imag = float(mi)
    return out, max_imag


def kloosterman_batch(cs, ds, p):
    """Kloosterman sums for paired coefficient arrays; returns (re, im)."""
    cs = np.asarray(cs, dtype=np.int64)
    ds = np.asarray(ds, dtype=np.int64)
    ct, st = _root_tables(p)
    x = np.arange(1, p, dtype=np.int64)
    xinv = mod_inverse_table(p)[1:]
    re = np.empty(len(cs), dtype=np.float64)
    im = np.empty(len(cs), dtype=np.float64)
    # chunked so the index matrix stays around ~10^7 entries
    chunk = max(1, int(1e7) // max(1, p - 1))
    for lo in range(0, len(cs), chunk):
        hi = min(lo + chunk, len(cs))
        idx = (cs[lo:hi, None] * x[None, :] + ds[lo:hi, None] * xinv[None, :]) % p
        re[lo:hi] = ct[idx].sum(axis=1)
        im[lo:hi] = st[idx].sum(axis=1)
    return re, im


def _chi_table(p):
    """Quadratic character chi(v) for v in 0..p-1 as int8 (chi(0) = 0)."""
    y = np.arange(p, dtype=np.int64)
    sq = (y * y) % p
    chi = np.full(p, -1, dtype=np.int8)
    chi[sq] = 1
    chi[0] = 0
    return chi


def _sqrt_count_table(p):
    """cnt[v] = number of y in F_p with y^2 = v."""
    y = np.arange(p, dtype=np.int64)
    sq = (y * y) % p
    return np.bincount(sq, minlength=p).astype(np.int64)


def _cubic_values(p, c):
    x = np.arange(p, dtype=np.int64)
    return (((x * x) % p) * x + c * x) % p  # x^3 + c*x, overflow-safe for p < 2^31


def trace_block(p, c_lo, c_hi):
    """Frobenius traces a_p = -sum_x chi(x^3 + c*x + d) for c in [c_lo, c_hi)
    and all d in 1..p-1, with every cell cross-checked against the
    independent point-count route (number of y with y^2 = f(x), summed).

    Returns (a_p grid as int32, number of cross-check mismatches).
    """
    chi = _chi_table(p)
    cnt = _sqrt_count_table(p)
    ds = np.arange(1, p, dtype=np.int64)
    out = np.empty((c_hi - c_lo, p - 1), dtype=np.int32)
    mismatches = 0
    for ci, c in enumerate(range(c_lo, c_hi)):
        fx = (_cubic_values(p, c)[None, :] + ds[:, None]) % p  # (d, x)
        ap = -chi[fx].sum(axis=1, dtype=np.int64)
        affine = cnt[fx].sum(axis=1)
        mismatches += int(np.count_nonzero(ap != p - affine))
        out[ci] = ap
    return out, mismatches


def trace_batch(cs, ds, p):
    """Character-sum traces for paired coefficient arrays."""
    cs = np.asarray(cs, dtype=np.int64)
    ds = np.asarray(ds, dtype=np.int64)
    chi = _chi_table(p)
    x = np.arange(p, dtype=np.int64)
    x3 = ((x * x) % p) * x % p
    out = np.empty(len(cs), dtype=np.int64)
    for i in range(len(cs)):
        fx = (x3 + cs[i] * x + ds[i]) % p
        out[i] = -chi[fx].sum(dtype=np.int64)
    return out


def affine_batch(cs, ds, p):
    """Affine point counts of y^2 = x^3 + c*x + d via direct solution
    counting (independent of the quadratic character)."""
    cs = np.asarray(cs, dtype=np.int64)
    ds = np.asarray(ds, dtype=np.int64)
    cnt = _sqrt_count_table(p)
    x = np.arange(p, dtype=np.int64)
    x3 = ((x * x) % p) * x % p
    out = np.empty(len(cs), dtype=np.int64)
    for i in range(len(cs)):
        fx = (x3 + cs[i] * x + ds[i]) % p
        out[i] = cnt[fx].sum()
    return out


def first_match(bits, word, start):
    """Smallest k >= start with bits[k:k+len(word)] == word, else -1."""
    bits = np.asarray(bits, dtype=np.uint8)
    word = np.asarray(word, dtype=np.uint8)
    d = len(word)
    if len(bits) - start < d:
        return -1
    windows = np.lib.stride_tricks.sliding_window_view(bits, d)[start:]
    hits = np.flatnonzero((windows == word).all(axis=1))
    return int(hits[0]) + start if hits.size else -1
