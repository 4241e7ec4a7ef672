"""The Hasse-Kloosterman angle map hk(c,d) = (phi_p, theta_p) on [0,pi]^2,
in both flavours: the functional scan over (F_p*)^2 at a fixed prime, and
the arithmetic scan over primes at fixed integer coefficients.  Angle pairs
are digitized through a pair of partitions of [0, pi] into a base-d code
whose digits embed the scan into the unit square.

Scans split the work over processes when workers > 1; each (c,d) cell is
computed independently, so results are identical for any worker count.
"""

import math
from bisect import bisect_right
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .arith import primes_in_range
from .expsums import _check_scan_prime, weil_angle


@dataclass(frozen=True)
class AnglePair:
    phi: float
    theta: float
    p: int
    c: int
    d: int


@dataclass(frozen=True)
class PartitionPair:
    """Equal-cardinality cell partitions of [0, pi]: `horizontal` digitizes
    phi, `vertical` digitizes theta.  Boundaries are strictly increasing
    from 0 to pi; cells are half-open [lo, hi) with the last cell closed,
    so boundary angles belong to the upper cell."""

    horizontal: tuple
    vertical: tuple

    def __post_init__(self):
        for name, bounds in (("horizontal", self.horizontal), ("vertical", self.vertical)):
            if len(bounds) < 3:
                raise ValueError(f"{name} partition needs at least 2 cells")
            if bounds[0] != 0.0 or abs(bounds[-1] - math.pi) > 1e-12:
                raise ValueError(f"{name} boundaries must run from 0 to pi")
            if any(a >= b for a, b in zip(bounds, bounds[1:])):
                raise ValueError(f"{name} boundaries must be strictly increasing")
        if len(self.horizontal) != len(self.vertical):
            raise ValueError("partitions must have equal cardinality")

    @classmethod
    def uniform(cls, cells):
        if cells < 2:
            raise ValueError("need at least 2 cells")
        bounds = tuple(i * math.pi / cells for i in range(cells + 1))
        return cls(horizontal=bounds, vertical=bounds)

    @property
    def cardinality(self):
        return len(self.horizontal) - 1

    @staticmethod
    def _cell(bounds, angle):
        if not 0.0 <= angle <= math.pi:
            raise ValueError(f"angle {angle} outside [0, pi]")
        return min(bisect_right(bounds, angle) - 1, len(bounds) - 2)

    def horizontal_cell(self, angle):
        return self._cell(self.horizontal, angle)

    def vertical_cell(self, angle):
        return self._cell(self.vertical, angle)


@dataclass(frozen=True)
class DigitSequence:
    """Base-d code of an angle-pair stream: one a-digit (from phi) and one
    b-digit (from theta) per pair.  `finite` marks a complete code; prime
    scans are truncations of an infinite stream."""

    a_digits: tuple
    b_digits: tuple
    base: int
    finite: bool

    def __post_init__(self):
        if self.base < 2:
            raise ValueError("base must be >= 2")
        for ds in (self.a_digits, self.b_digits):
            if any(not 0 <= v < self.base for v in ds):
                raise ValueError("digit outside [0, base-1]")


def hk_point(c, d, p):
    """Angle pair (phi_p, theta_p) at one input; needs p odd and p not
    dividing c*d so that both coordinates exist."""
    p = _check_scan_prime(p)
    if c % p == 0 or d % p == 0:
        raise ValueError(f"c*d must be nonzero mod p (c={c}, d={d}, p={p})")
    cr, dr = c % p, d % p
    a_p = int(kernels.trace_batch([cr], [dr], p)[0])
    affine = int(kernels.affine_batch([cr], [dr], p)[0])
    if a_p != p - affine:
        raise RuntimeError(f"trace routes disagree at (c={c}, d={d}, p={p})")
    re, im = kernels.kloosterman_batch([cr], [dr], p)
    if abs(im[0]) > 1e-9:
        raise RuntimeError(f"Kloosterman imaginary part {im[0]} at (c={c}, d={d}, p={p})")
    return AnglePair(
        phi=weil_angle(a_p, p), theta=weil_angle(float(re[0]), p), p=p, c=c, d=d
    )


def _functional_block(args):
    p, c_lo, c_hi = args
    ap, mismatches = kernels.trace_block(p, c_lo, c_hi)
    re, max_imag = kernels.kloosterman_block(p, c_lo, c_hi)
    return ap, mismatches, re, max_imag


def functional_scan_rows(p, workers=1):
    """Rows (c, d, a_p, T_re, phi, theta) for every (c,d) in [1,p-1]^2 in
    lexicographic order; exactly (p-1)^2 of them.  Each cell is computed
    independently, so the result is identical for any worker count."""
    p = _check_scan_prime(p)
    if workers <= 1 or p - 1 < 2 * workers:
        blocks = [_functional_block((p, 1, p))]
    else:
        step = max(1, (p - 1 + workers - 1) // workers)
        splits = [(p, lo, min(lo + step, p)) for lo in range(1, p, step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            blocks = list(pool.map(_functional_block, splits))
    rows = []
    c = 1
    for ap, mismatches, re, max_imag in blocks:
        if mismatches:
            raise RuntimeError(f"{mismatches} trace/point-count mismatches at p={p}")
        if max_imag > 1e-9:
            raise RuntimeError(f"Kloosterman imaginary part {max_imag} at p={p}")
        for r in range(ap.shape[0]):
            for d in range(1, p):
                a = int(ap[r, d - 1])
                t = float(re[r, d - 1])
                rows.append((c, d, a, t, weil_angle(a, p), weil_angle(t, p)))
            c += 1
    return rows


def hk_functional_scan(p, workers=1):
    """Angle pairs for every (c,d) in [1,p-1]^2 in lexicographic order."""
    p = int(p)
    return [
        AnglePair(phi=phi, theta=theta, p=p, c=c, d=d)
        for c, d, _, _, phi, theta in functional_scan_rows(p, workers)
    ]


def _arithmetic_chunk(args):
    c, d, ps = args
    out = []
    for p in ps:
        cr, dr = c % p, d % p
        a_p = int(kernels.trace_batch([cr], [dr], p)[0])
        affine = int(kernels.affine_batch([cr], [dr], p)[0])
        if a_p != p - affine:
            raise RuntimeError(f"trace routes disagree at (c={c}, d={d}, p={p})")
        re, im = kernels.kloosterman_batch([cr], [dr], p)
        if abs(im[0]) > 1e-9:
            raise RuntimeError(f"Kloosterman imaginary part {im[0]} at (c={c}, d={d}, p={p})")
        t = float(re[0])
        out.append((p, a_p, t, weil_angle(a_p, p), weil_angle(t, p)))
    return out


def arithmetic_scan_rows(c, d, p_max, workers=1):
    """Rows (p, a_p, T_re, phi, theta) at every odd prime p <= p_max with p
    not dividing c*d, ascending; coefficients are reduced mod p per prime."""
    if c == 0 or d == 0:
        raise ValueError("c and d must be nonzero (every prime would be excluded)")
    ps = [p for p in primes_in_range(3, p_max) if c % p != 0 and d % p != 0] if p_max >= 3 else []
    if workers <= 1 or len(ps) < 2 * workers:
        return _arithmetic_chunk((c, d, ps))
    step = (len(ps) + workers - 1) // workers
    chunks = [(c, d, ps[i : i + step]) for i in range(0, len(ps), step)]
    rows = []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_arithmetic_chunk, chunks):
            rows.extend(part)
    return rows


def hk_arithmetic_scan(c, d, p_max, workers=1):
    """Angle pairs at every odd prime p <= p_max with p not dividing c*d."""
    return [
        AnglePair(phi=phi, theta=theta, p=p, c=c, d=d)
        for p, _, _, phi, theta in arithmetic_scan_rows(c, d, p_max, workers)
    ]


def encode_stream(pairs, partitions, finite=True):
    """Digitize an ordered angle-pair stream: the i-th pair contributes
    a_i = horizontal cell of phi and b_{i-1} = vertical cell of theta."""
    if finite and not pairs:
        raise ValueError("finite encoding needs a nonempty stream")
    a = tuple(partitions.horizontal_cell(pt.phi) for pt in pairs)
    b = tuple(partitions.vertical_cell(pt.theta) for pt in pairs)
    return DigitSequence(a_digits=a, b_digits=b, base=partitions.cardinality, finite=finite)


def digits_to_point(seq):
    """Unit-square interpretation x = sum a_i/d^i, y = sum b_{i-1}/d^i as
    exact rationals.  For truncated streams the truncation error is below
    d**-r after r digits."""
    d = seq.base
    x = sum(Fraction(a, d ** (i + 1)) for i, a in enumerate(seq.a_digits))
    y = sum(Fraction(b, d ** (i + 1)) for i, b in enumerate(seq.b_digits))
    return Fraction(x), Fraction(y)
