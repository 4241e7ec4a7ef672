"""Hasse and Kloosterman components: point counts on cubic curves y^2 = x^3
+ c*x + d over F_p, Frobenius traces a_p, Kloosterman sums T_p(c,d), and the
arccos normalization that places both on [0, pi].

Two independent routes are kept for the trace: the quadratic-character sum
a_p = -sum_x chi(f(x)) and direct solution counting #{(x,y): y^2 = f(x)}.
trace_ap verifies a_p == p - affine_count on every call.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .arith import is_prime

# modular width guarantee: scans reject p at or above this
P_LIMIT = 2**31

WEIL_SLACK = 1e-6  # tolerance before weil_angle declares an upstream bug
IMAG_TOL = 1e-9  # Kloosterman sums are real up to roundoff


@dataclass(frozen=True)
class CubicCurveParams:
    """Integer coefficients (c, d) of f(x) = x^3 + c*x + d."""

    c: int
    d: int

    @property
    def discriminant_quantity(self):
        """4c^3 + 27d^2; the reduction mod an odd prime p is elliptic iff
        p does not divide this."""
        return 4 * self.c**3 + 27 * self.d**2

    def is_elliptic_mod(self, p):
        return p != 2 and self.discriminant_quantity % p != 0


@dataclass(frozen=True)
class TraceResult:
    a_p: int
    affine_count: int
    is_elliptic: bool


@dataclass(frozen=True)
class KloostermanValue:
    real_part: float
    imag_part: float
    p: int


def _check_scan_prime(p):
    p = int(p)
    if p >= P_LIMIT:
        raise ValueError(f"p = {p} exceeds the supported range (p < 2**31)")
    if p == 2:
        raise ValueError("p = 2 is rejected: the Legendre-sum formula needs odd p")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return p


def affine_point_count(curve, p):
    """Number of affine points of y^2 = x^3 + c*x + d over F_p, p odd.

    Counted directly: for each x, the number of square roots of f(x).
    Equals sum_x (1 + (f(x)/p)) since v has 1 + chi(v) square roots.
    """
    p = _check_scan_prime(p)
    return int(kernels.affine_batch([curve.c % p], [curve.d % p], p)[0])


def trace_ap(curve, p):
    """Frobenius trace a_p = -sum_x (f(x)/p), cross-checked against
    p - affine_point_count.  Works for singular reductions too, where the
    sum lands in {-1, 0, 1}."""
    p = _check_scan_prime(p)
    a_p = int(kernels.trace_batch([curve.c % p], [curve.d % p], p)[0])
    affine = affine_point_count(curve, p)
    if a_p != p - affine:
        raise RuntimeError(
            f"trace routes disagree at (c={curve.c}, d={curve.d}, p={p}): "
            f"character sum {a_p}, point count gives {p - affine}"
        )
    return TraceResult(a_p=a_p, affine_count=affine, is_elliptic=curve.is_elliptic_mod(p))


def kloosterman_sum(c, d, p):
    """Kloosterman sum T_p(c,d) = sum_{x=1}^{p-1} e((c*x + d/x)/p) where
    e(t) = exp(2*pi*i*t).  Real by the x <-> -x pairing; the imaginary part
    is kept as a roundoff diagnostic.  Requires p not dividing c*d."""
    p = int(p)
    if p >= P_LIMIT:
        raise ValueError(f"p = {p} exceeds the supported range (p < 2**31)")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if c % p == 0 or d % p == 0:
        raise ValueError(f"c*d must be nonzero mod p (c={c}, d={d}, p={p})")
    re, im = kernels.kloosterman_batch([c % p], [d % p], p)
    return KloostermanValue(real_part=float(re[0]), imag_part=float(im[0]), p=p)


def weil_angle(value, p):
    """arccos(value / (2*sqrt(p))) in [0, pi].  Both the Hasse and Weil
    bounds guarantee |value| <= 2*sqrt(p); anything beyond a 1e-6 slack is
    an upstream bug and raises."""
    bound = 2.0 * math.sqrt(p)
    if abs(value) > bound + WEIL_SLACK:
        raise ValueError(f"|{value}| exceeds 2*sqrt({p}) = {bound}: upstream bug")
    ratio = min(1.0, max(-1.0, value / bound))
    return math.acos(ratio)


def kloosterman_grid(p, c_lo=1, c_hi=None, check=True):
    """Real parts of T_p(c,d) for c in [c_lo, c_hi) and all d in 1..p-1
    (row c-c_lo, column d-1), summed term by term per cell.

    With check=True the Weil bound and the realness budget are enforced on
    the whole block before returning.
    """
    p = _check_scan_prime(p)
    if c_hi is None:
        c_hi = p
    re, max_imag = kernels.kloosterman_block(p, c_lo, c_hi)
    if check:
        if max_imag > IMAG_TOL:
            raise RuntimeError(f"Kloosterman imaginary part {max_imag} exceeds {IMAG_TOL} at p={p}")
        bound = 2.0 * math.sqrt(p) + IMAG_TOL
        if np.abs(re).max() > bound:
            raise RuntimeError(f"Weil bound violated at p={p}")
    return re, max_imag


def trace_grid(p, c_lo=1, c_hi=None):
    """a_p(c,d) for c in [c_lo, c_hi) and all d in 1..p-1 (row c-c_lo,
    column d-1).  Every cell is cross-checked against the point-count route
    inside the kernel; any mismatch raises."""
    p = _check_scan_prime(p)
    if c_hi is None:
        c_hi = p
    ap, mismatches = kernels.trace_block(p, c_lo, c_hi)
    if mismatches:
        raise RuntimeError(f"{mismatches} trace/point-count mismatches at p={p}")
    return ap
