"""Beta-transformations T_beta(x) = beta*x mod 1, greedy beta-expansions,
the lexicographic (Parry) admissibility test, and the two-dimensional
natural-extension map (x, y) -> (T_beta x, (floor(beta*x) + y)/beta).

Expansions are computed in extended precision (mpmath, 50 decimal digits by
default, ~166 bits) because double-precision digit errors compound after a
few dozen iterations.  Products that land within a tiny snap window of an
integer are treated as exact, so algebraic identities like
golden*(golden-1) = 1 resolve to the intended digit.  Named constants
("golden") and decimal strings are accepted wherever a beta or x is taken,
since a float input would silently mean its nearest binary rational.
"""

import math
from dataclasses import dataclass

import mpmath
import numpy as np

WORK_DPS = 50
_SNAP = mpmath.mpf(10) ** (-(WORK_DPS - 10))

GOLDEN = "golden"


def resolve_beta(beta):
    """Turn a beta spec (float, decimal string, 'golden', or mpf) into an
    mpf at working precision."""
    with mpmath.workdps(WORK_DPS):
        if isinstance(beta, str):
            # unary + forces the lazy constant to an mpf at the working dps
            b = +mpmath.phi if beta.strip().lower() == GOLDEN else mpmath.mpf(beta)
        else:
            b = mpmath.mpf(beta)
        if b <= 1:
            raise ValueError(f"beta must exceed 1, got {beta}")
        return b


@dataclass(frozen=True)
class BetaExpansion:
    digits: tuple
    x: float
    beta: float

    def __post_init__(self):
        cap = math.ceil(self.beta) - 1
        # x = 1 may legitimately open with digit floor(beta) = cap + 1
        if any(not 0 <= v <= cap + 1 for v in self.digits):
            raise ValueError("digit outside the admissible alphabet")


def beta_map_step(x, beta):
    """One application of T_beta in float arithmetic."""
    if beta <= 1:
        raise ValueError(f"beta must exceed 1, got {beta}")
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x must lie in [0, 1], got {x}")
    return math.fmod(beta * x, 1.0)


def _digits(x, b, n):
    """Greedy digits of x under T_b in working precision; snaps b*t to an
    integer when within the snap window (exact-termination detection)."""
    out = []
    t = x
    for _ in range(n):
        v = b * t
        k = mpmath.floor(v)
        if v - k > 1 - _SNAP:
            k += 1
        out.append(int(k))
        t = v - k
        if t < 0:
            t = mpmath.mpf(0)
    return out


def beta_expansion(x, beta, n):
    """First n digits of the greedy beta-expansion of x in [0, 1]."""
    if n < 1:
        raise ValueError("need n >= 1 digits")
    b = resolve_beta(beta)
    with mpmath.workdps(WORK_DPS):
        xv = mpmath.mpf(x)
        if not 0 <= xv <= 1:
            raise ValueError(f"x must lie in [0, 1], got {x}")
        digits = _digits(xv, b, n)
    return BetaExpansion(digits=tuple(digits), x=float(xv), beta=float(b))


def quasi_greedy_one(beta, horizon):
    """Quasi-greedy expansion of 1 to `horizon` digits: equals the greedy
    expansion when that never terminates; when the greedy expansion of 1 is
    finite (d_1..d_m then zeros forever), it is the periodic word
    (d_1 .. d_{m-1} (d_m - 1)) repeated."""
    b = resolve_beta(beta)
    with mpmath.workdps(WORK_DPS):
        out = []
        t = mpmath.mpf(1)
        for _ in range(horizon):
            v = b * t
            k = mpmath.floor(v)
            if v - k > 1 - _SNAP:
                k += 1
            t = v - k
            out.append(int(k))
            if t < _SNAP:  # greedy expansion of 1 terminated
                while out and out[-1] == 0:
                    out.pop()
                out[-1] -= 1
                period = tuple(out)
                reps = -(-horizon // len(period))
                return (period * reps)[:horizon]
        return tuple(out)


def is_admissible(digits, beta, horizon=200):
    """Lexicographic admissibility: every suffix of `digits` must compare
    <= the quasi-greedy expansion of 1.  Returns True/False when decided,
    None when a suffix matches the reference for the whole horizon."""
    ref = quasi_greedy_one(beta, horizon)
    if any(v < 0 for v in digits):
        raise ValueError("digits must be nonnegative")
    decided = True
    for s in range(len(digits)):
        suffix = digits[s:]
        m = min(len(suffix), horizon)
        verdict = None  # equal so far
        for j in range(m):
            if suffix[j] != ref[j]:
                verdict = suffix[j] < ref[j]
                break
        if verdict is False:
            return False
        if verdict is None and len(suffix) > horizon:
            decided = False  # ran off the horizon while still equal
    return True if decided else None


def natural_extension_step(point, beta):
    """(x, y) -> (beta*x mod 1, (floor(beta*x) + y)/beta)."""
    if beta <= 1:
        raise ValueError(f"beta must exceed 1, got {beta}")
    x, y = point
    if not (0.0 <= x <= 1.0 and 0.0 <= y <= 1.0):
        raise ValueError(f"point {point} outside the unit square")
    v = beta * x
    k = math.floor(v)
    return v - k, (k + y) / beta


def natural_extension_orbit(seed, beta, n, burn_in=0):
    """Orbit of the natural-extension map after discarding burn_in steps."""
    if n < 0 or burn_in < 0:
        raise ValueError("n and burn_in must be nonnegative")
    pt = tuple(seed)
    for _ in range(burn_in):
        pt = natural_extension_step(pt, beta)
    out = []
    for _ in range(n):
        pt = natural_extension_step(pt, beta)
        out.append(pt)
    return out


def invariant_domain_indicator(beta):
    """Membership test for the natural-extension domain, for the two bases
    with a known closed form: integer beta (full square) and the golden
    ratio (square minus [1/beta,1)^2).  Returns a vectorized predicate."""
    if isinstance(beta, str) and beta.strip().lower() == GOLDEN:
        g = (1 + math.sqrt(5)) / 2
        inv = 1.0 / g
        return lambda x, y: ~((x >= inv) & (y >= inv))
    bf = float(beta)
    if bf > 1 and bf == int(bf):
        return lambda x, y: np.ones_like(np.asarray(x), dtype=bool)
    raise ValueError(f"no closed-form extension domain known here for beta={beta!r}")


def lebesgue_invariance_report(beta, n_samples, seed, grid=16):
    """One-step pushforward check of Lebesgue invariance on the extension
    domain: draw n_samples uniform points on the domain, histogram them on
    a grid x grid partition of the square, apply the map once, histogram
    again.  Reports the worst cell discrepancy measured in Monte Carlo
    standard errors (both histograms are multinomial draws of the same
    invariant cell masses)."""
    indicator = invariant_domain_indicator(beta)
    bf = (1 + math.sqrt(5)) / 2 if isinstance(beta, str) else float(beta)
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))
    xs = np.empty(n_samples)
    ys = np.empty(n_samples)
    have = 0
    while have < n_samples:
        draw = rng.random((2, max(1024, n_samples - have)))
        keep = indicator(draw[0], draw[1])
        take = min(int(keep.sum()), n_samples - have)
        xs[have : have + take] = draw[0][keep][:take]
        ys[have : have + take] = draw[1][keep][:take]
        have += take
    v = bf * xs
    k = np.floor(v)
    x2, y2 = v - k, (k + ys) / bf
    before = np.histogram2d(xs, ys, bins=grid, range=[[0, 1], [0, 1]])[0]
    after = np.histogram2d(x2, y2, bins=grid, range=[[0, 1], [0, 1]])[0]
    qb, qa = before / n_samples, after / n_samples
    se = np.sqrt((qb * (1 - qb) + qa * (1 - qa)) / n_samples)
    diff = np.abs(qb - qa)
    with np.errstate(divide="ignore", invalid="ignore"):
        sigmas = np.where(diff > 0, diff / np.where(se > 0, se, np.inf), 0.0)
    return {
        "max_sigmas": float(sigmas.max()),
        "worst_cell": tuple(int(t) for t in np.unravel_index(sigmas.argmax(), sigmas.shape)),
        "grid": grid,
        "n_samples": n_samples,
    }
